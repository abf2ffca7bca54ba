#pragma once

// Named verification suites. Each returns a Report whose record order does
// not depend on the number of worker threads.

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fockarith/arith.hpp"
#include "fockarith/conv_algebra.hpp"
#include "fockarith/fock_ops.hpp"
#include "fockarith/hardy.hpp"
#include "fockarith/parallel.hpp"
#include "fockarith/report.hpp"

namespace fockarith {

struct SuiteOptions {
  u64 n_max = 12;
  std::size_t dim = 0;  // 0 selects the suite's own sufficient dimension
  std::vector<u64> ns;  // explicit n values, where a suite takes them
  std::vector<u64> js;
  cplx lambda{0.7 * std::cos(std::numbers::pi / 7), 0.7 * std::sin(std::numbers::pi / 7)};
  double s = 2.0;
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
  CoprimeRange range = CoprimeRange::one_to_n;
};

namespace suites {

inline Report merge(const std::vector<Report>& parts) {
  Report r;
  for (const auto& p : parts) r.append(p);
  return r;
}

/// Pi_k(n) Pi_l(m) against the CRT prediction, every residue pair, at
/// D = 4 lcm(n, m) unless a dimension is forced. One record per (n, m).
inline Report theorem1(const SuiteOptions& o) {
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 n = 1; n <= o.n_max; ++n)
    for (u64 m = 1; m <= o.n_max; ++m) pairs.push_back({n, m});
  return merge(parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
    const auto [n, m] = pairs[i];
    const std::size_t dim = o.dim ? o.dim : 4 * lcm_checked(n, m);
    u64 bad = 0;
    for (u64 k = 0; k < n; ++k)
      for (u64 l = 0; l < m; ++l)
        if (!theorem1_product(k, n, l, m, dim).agrees) ++bad;
    Report r;
    r.add("theorem1", {n, m}, static_cast<double>(bad), 0.0, bad ? std::to_string(bad) + " residue pairs disagree" : "");
    return r;
  }));
}

/// Pi_j(n) Pi_j(m) = Pi_j(nm) for coprime n, m at D = 4nm, all j < nm.
inline Report bb2(const SuiteOptions& o) {
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 n = 1; n <= o.n_max; ++n)
    for (u64 m = 1; m <= o.n_max; ++m)
      if (std::gcd(n, m) == 1) pairs.push_back({n, m});
  return merge(parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
    const auto [n, m] = pairs[i];
    const std::size_t dim = o.dim ? o.dim : 4 * n * m;
    double dev = 0.0;
    for (u64 j = 0; j < n * m; ++j)
      dev = std::max(dev, max_deviation(projector(j, n, dim, ProjectorMode::normalized) *
                                            projector(j, m, dim, ProjectorMode::normalized),
                                        projector(j, n * m, dim, ProjectorMode::normalized)));
    Report r;
    r.add("bb2", {n, m}, dev, 0.0);
    return r;
  }));
}

/// sum_j Pi_j(n) = 1 and Pi_i(n) Pi_j(n) = delta_ij Pi_j(n), exactly.
inline Report completeness(const SuiteOptions& o) {
  const std::size_t dim = o.dim ? o.dim : 512;
  return merge(parallel_map(o.n_max, o.jobs, [&](std::size_t idx) {
    const u64 n = idx + 1;
    FockOperator sum = FockOperator::zero(dim);
    double orth = 0.0;
    for (u64 i = 0; i < n; ++i) {
      const auto pi = projector(i, n, dim, ProjectorMode::normalized);
      sum = sum + pi;
      for (u64 j = 0; j < n; ++j) {
        const auto pj = projector(j, n, dim, ProjectorMode::normalized);
        orth = std::max(orth, max_deviation(pi * pj, i == j ? pj : FockOperator::zero(dim)));
      }
    }
    Report r;
    r.add("completeness", {n}, max_deviation(sum, FockOperator::identity(dim)), 0.0);
    r.add("orthogonality", {n}, orth, 0.0);
    return r;
  }));
}

/// S_n unitary, S_n^n = 1, and the projector recovered from powers of S_n.
inline Report rotated_suite(const SuiteOptions& o) {
  const std::size_t dim = o.dim ? o.dim : 256;
  return merge(parallel_map(o.n_max, o.jobs, [&](std::size_t idx) {
    const u64 n = idx + 1;
    const auto s = rotated(n, dim);
    const auto id = FockOperator::identity(dim);
    double inv = 0.0;
    for (u64 j = 0; j < n; ++j)
      inv = std::max(inv, max_deviation(projector_from_rotated(j, n, dim), projector(j, n, dim, ProjectorMode::normalized)));
    Report r;
    r.add("rotated/unitary", {n}, max_deviation(s * adjoint(s), id), 1e-12);
    r.add("rotated/power_n", {n}, max_deviation(power(s, static_cast<unsigned>(n)), id), 1e-12);
    r.add("rotated/inversion", {n}, inv, 1e-12);
    return r;
  }));
}

inline Report progression(const SuiteOptions& o) {
  Report r;
  for (u64 n = 1; n <= o.n_max; ++n)
    for (u64 rr = 1; rr <= 4; ++rr) {
      const std::size_t dim = o.dim ? o.dim : 3 * n * rr + 5;
      for (u64 j = 0; j < n; ++j) {
        const auto split = progression_split(j, n, rr, dim);
        r.add("progression_split", {j, n, rr}, split.exact && split.index_sets_agree ? 0.0 : 1.0, 0.0);
      }
    }
  return r;
}

/// Pi_j(n) = prod over p^a || n of Pi_{j mod p^a}(p^a).
inline Report prime_split(const SuiteOptions& o) {
  const u64 top = std::max<u64>(o.n_max, 2);
  return merge(parallel_map(top, o.jobs, [&](std::size_t idx) {
    const u64 n = idx + 1;
    const std::size_t dim = o.dim ? o.dim : 2 * n + 3;
    double dev = 0.0;
    for (u64 j = 0; j < n; ++j) {
      FockOperator prod = FockOperator::identity(dim);
      for (const auto& [p, a] : factorize(n)) {
        u64 q = 1;
        for (unsigned e = 0; e < a; ++e) q *= p;
        prod = prod * projector(j % q, q, dim, ProjectorMode::normalized);
      }
      dev = std::max(dev, max_deviation(prod, projector(j, n, dim, ProjectorMode::normalized)));
    }
    Report r;
    r.add("prime_power_split", {n}, dev, 0.0);
    return r;
  }));
}

inline Report b_identities(const SuiteOptions& o) {
  const u64 j = o.js.empty() ? 0 : o.js.front();
  const std::size_t dim = o.dim ? o.dim : static_cast<std::size_t>(std::max<u64>(256, j + 2 * o.n_max + 1));
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<i64> val(-9, 9);
  std::vector<i64> ta(17), tb(17);
  for (int k = 1; k <= 16; ++k) {
    ta[k] = val(rng);
    tb[k] = val(rng);
  }
  const ArithmeticFn<i64> a([ta](u64 n) { return n <= 16 ? ta[n] : i64{0}; });
  const ArithmeticFn<i64> b([tb](u64 n) { return n <= 16 ? tb[n] : i64{0}; });
  const auto nu0 = fns::nu0();
  Report r;
  for (auto fam : {ProjectorFamily::normalized, ProjectorFamily::literal, ProjectorFamily::bar}) {
    r.append(verify_b_identities(nu0, nu0, j, o.n_max, dim, fam));
    r.append(verify_b_identities(fns::mobius(), nu0, j, o.n_max, dim, fam));
    r.append(verify_b_identities(a, b, j, o.n_max, dim, fam));
  }
  return r;
}

/// Ten random integer pairs supported on [1, 16], each j in js.
inline Report prop1(const SuiteOptions& o) {
  const std::size_t dim = o.dim ? o.dim : 256;
  const std::vector<u64> js = o.js.empty() ? std::vector<u64>{0, 1, 3} : o.js;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<i64> val(-9, 9);
  std::vector<std::pair<std::vector<i64>, std::vector<i64>>> tables(10);
  for (auto& [ta, tb] : tables) {
    ta.assign(17, 0);
    tb.assign(17, 0);
    for (int k = 1; k <= 16; ++k) {
      ta[k] = val(rng);
      tb[k] = val(rng);
    }
  }
  std::vector<std::pair<std::size_t, u64>> tasks;
  for (std::size_t p = 0; p < tables.size(); ++p)
    for (u64 j : js) tasks.push_back({p, j});
  return merge(parallel_map(tasks.size(), o.jobs, [&](std::size_t i) {
    const auto& [ta, tb] = tables[tasks[i].first];
    const ArithmeticFn<i64> a([ta = ta](u64 n) { return n <= 16 ? ta[n] : i64{0}; });
    const ArithmeticFn<i64> b([tb = tb](u64 n) { return n <= 16 ? tb[n] : i64{0}; });
    Report r = proposition1_check(a, b, tasks[i].second, dim);
    for (auto& rec : r.records) rec.note = "pair " + std::to_string(tasks[i].first);
    return r;
  }));
}

inline Report ref(const SuiteOptions& o) {
  const std::vector<u64> ns = o.ns.empty() ? std::vector<u64>{2, 3, 4, 6, 12} : o.ns;
  const std::vector<u64> js = o.js.empty() ? std::vector<u64>{0, 1} : o.js;
  const DiscPoint p(o.lambda);
  Report r;
  for (u64 n : ns)
    for (u64 j : js) r.append(check_ref_identities(n, j, p, o.range));
  return r;
}

/// C_j(n) = (mu * nu_1 Pi_j)(n) and T_j(n) = (nu_0 * mu Pi_j)(n) with literal
/// projectors. Verified domain is j = 0; T at n = 1 uses the 0..n-1 range.
inline Report ramanujan(const SuiteOptions& o) {
  const std::size_t dim = o.dim ? o.dim : 128;
  const std::vector<u64> js = o.js.empty() ? std::vector<u64>{0} : o.js;
  const auto lit = [dim](u64 j) { return projector_seq(j, dim, ProjectorMode::literal); };
  Report r;
  for (u64 j : js) {
    const OperatorSeq c_rhs = conv_seq(ConvKind::dirichlet, scalar_identity_seq(fns::mobius(), dim),
                                       scalar_weighted_seq(fns::nu1(), lit(j)));
    const OperatorSeq t_rhs = conv_seq(ConvKind::dirichlet, scalar_identity_seq(fns::nu0(), dim),
                                       scalar_weighted_seq(fns::mobius(), lit(j)));
    for (u64 n = 1; n <= o.n_max; ++n) {
      r.add("C_j=mu*nu1Pi_j", {n, j}, max_deviation(ramanujan_c(j, n, dim, o.range), c_rhs(n)), 1e-10);
      r.add("T_j=nu0*muPi_j", {n, j},
            max_deviation(ramanujan_t(j, n, dim, n == 1 ? CoprimeRange::zero_to_n_minus_1 : o.range), t_rhs(n)),
            1e-10, n == 1 ? "k range 0..n-1" : "");
    }
  }
  return r;
}

/// Classical identities behind the operator ones: Moebius inversion, Euler's
/// identity, M_2 and 2^omega.
inline Report scalar(const SuiteOptions& o) {
  const u64 top = std::max<u64>(o.n_max, 1);
  const auto mu = fns::mobius();
  const auto phi = fns::phi();
  const auto nu0 = fns::nu0();
  const std::size_t chunks = std::min<u64>(top, 64);
  const auto parts = parallel_map(chunks, o.jobs, [&](std::size_t c) {
    std::array<double, 4> dev{};
    for (u64 n = c + 1; n <= top; n += chunks) {
      dev[0] = std::max(dev[0], std::abs(static_cast<double>(dirichlet_conv(mu, nu0, n) - (n == 1 ? 1 : 0))));
      dev[1] = std::max(dev[1], std::abs(static_cast<double>(dirichlet_conv(nu0, phi, n)) - static_cast<double>(n)));
      dev[2] = std::max(dev[2], std::abs(static_cast<double>(lcm_conv(nu0, nu0, n)) - static_cast<double>(m_count(2, n))));
      dev[3] = std::max(dev[3], std::abs(static_cast<double>(unitary_conv(nu0, nu0, n)) -
                                         std::ldexp(1.0, static_cast<int>(omega(n)))));
    }
    return dev;
  });
  std::array<double, 4> dev{};
  for (const auto& p : parts)
    for (std::size_t k = 0; k < 4; ++k) dev[k] = std::max(dev[k], p[k]);
  Report r;
  r.add("mobius_inversion", {top}, dev[0], 0.0);
  r.add("euler_identity", {top}, dev[1], 0.0);
  r.add("lcm_count_M2", {top}, dev[2], 0.0);
  r.add("unitary_count_2^omega", {top}, dev[3], 0.0);
  return r;
}

inline Report multiplicative(const SuiteOptions& o) {
  Report r;
  const std::size_t dim = o.dim ? o.dim : 4 * o.n_max;
  for (u64 j = 0; j < 4; ++j) {
    const auto v = check_extended_multiplicative(projector_seq(j, dim, ProjectorMode::normalized), o.n_max);
    r.add("extended_multiplicative/Pi_j", {j}, v.empty() ? 0.0 : v.front().deviation, 0.0,
          v.empty() ? "" : std::to_string(v.size()) + " violating pairs");
  }
  return r;
}

inline Report asymptotic(const SuiteOptions& o) {
  const RadialSchedule sched({0.9, 0.99, 0.999});
  const std::size_t dim = o.dim ? o.dim : minimal_dim(sched.point(2), 1e-13);
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 n = 2; n <= o.n_max; ++n)
    for (u64 m = n + 1; m <= o.n_max && n * m <= 60; ++m)
      if (std::gcd(n, m) == 1) pairs.push_back({n, m});
  const std::vector<u64> js = o.js.empty() ? std::vector<u64>{0} : o.js;
  Report r;
  for (u64 j : js) r.append(check_asymptotic_multiplicative(projector_seq(j, dim, ProjectorMode::literal), pairs, sched));
  return r;
}

inline Report zeta(const SuiteOptions& o) {
  return zeta_weighted_series_check(o.s, DiscPoint(o.lambda), o.dim ? o.dim : 256);
}

using SuiteFn = Report (*)(const SuiteOptions&);

inline const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"theorem1", &theorem1},     {"bb2", &bb2},
      {"completeness", &completeness}, {"rotated", &rotated_suite},
      {"progression", &progression}, {"prime_split", &prime_split},
      {"b123", &b_identities},     {"prop1", &prop1},
      {"ref", &ref},               {"ramanujan", &ramanujan},
      {"scalar", &scalar},         {"multiplicative", &multiplicative},
      {"asymptotic", &asymptotic}, {"zeta", &zeta},
  };
  return r;
}

}  // namespace suites

inline Report run_suite(const std::string& name, const SuiteOptions& o) {
  const auto& reg = suites::registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(o);
}

}  // namespace fockarith
