#pragma once

// Operator-valued convolution products on OperatorSeq and the identity
// checks that tie them back to the scalar products.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fockarith/arith.hpp"
#include "fockarith/fock_ops.hpp"
#include "fockarith/report.hpp"

namespace fockarith {

/// (A # B)(n) for # in {Dirichlet, lcm, unitary}. Operand order is kept:
/// every term is A(k) * B(l).
inline FockOperator op_conv(ConvKind kind, const OperatorSeq& a, const OperatorSeq& b, u64 n) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  detail::require_positive(n, "op_conv");
  const auto ds = divisors(n);
  FockOperator acc = FockOperator::zero(a.dim());
  switch (kind) {
    case ConvKind::dirichlet:
      for (u64 k : ds) acc = acc + a(k) * b(n / k);
      break;
    case ConvKind::lcm:
      for (u64 k : ds)
        for (u64 l : ds)
          if (k / std::gcd(k, l) * l == n) acc = acc + a(k) * b(l);
      break;
    case ConvKind::unitary:
      for (u64 k : ds)
        if (std::gcd(k, n / k) == 1) acc = acc + a(k) * b(n / k);
      break;
  }
  return acc;
}

inline OperatorSeq conv_seq(ConvKind kind, OperatorSeq a, OperatorSeq b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  const std::size_t d = a.dim();
  return OperatorSeq(d, [kind, a = std::move(a), b = std::move(b)](u64 n) { return op_conv(kind, a, b, n); });
}

/// n -> alpha(n) P(n).
template <class F>
OperatorSeq scalar_weighted_seq(F alpha, OperatorSeq p) {
  const std::size_t d = p.dim();
  return OperatorSeq(d, [alpha = std::move(alpha), p = std::move(p)](u64 n) {
    return detail::to_cplx(alpha(n)) * p(n);
  });
}

/// n -> a(n) * identity.
template <class F>
OperatorSeq scalar_identity_seq(F alpha, std::size_t dim) {
  return OperatorSeq(dim, [alpha = std::move(alpha), dim](u64 n) {
    return detail::to_cplx(alpha(n)) * FockOperator::identity(dim);
  });
}

/// Coprime pairs n <= m, nm <= n_max, with Phi(nm) != Phi(n) Phi(m).
inline std::vector<PairViolation> check_extended_multiplicative(const OperatorSeq& phi, u64 n_max,
                                                                 double tol = 0.0) {
  std::vector<PairViolation> out;
  for (u64 n = 1; n * n <= n_max; ++n)
    for (u64 m = n; n * m <= n_max; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const double dev = max_deviation(phi(n * m), phi(n) * phi(m));
      if (dev > tol) out.push_back({n, m, dev});
    }
  return out;
}

/// Which projector family the b-identities are checked with.
enum class ProjectorFamily { normalized, literal, bar };

inline const char* to_string(ProjectorFamily f) {
  switch (f) {
    case ProjectorFamily::normalized: return "normalized";
    case ProjectorFamily::literal: return "literal";
    case ProjectorFamily::bar: return "bar";
  }
  return "?";
}

inline OperatorSeq projector_family_seq(u64 j, std::size_t dim, ProjectorFamily family) {
  switch (family) {
    case ProjectorFamily::normalized: return projector_seq(j, dim, ProjectorMode::normalized);
    case ProjectorFamily::literal: return projector_seq(j, dim, ProjectorMode::literal);
    case ProjectorFamily::bar: return projector_bar_seq(j, dim);
  }
  throw std::logic_error("projector_family_seq");
}

/// The identities
///   b1: alpha P [lcm] beta P       = (alpha [lcm] beta) P
///   b2: alpha P [unitary] beta P   = (alpha [unitary] beta) P
///   b3: nu_0 * ((alpha [lcm] beta) P) = (nu_0 * alpha P)(nu_0 * beta P)
/// for every n <= n_max, with P one of the projector families. Integer data is
/// compared exactly.
template <class F, class G>
Report verify_b_identities(const F& alpha, const G& beta, u64 j, u64 n_max, std::size_t dim,
                           ProjectorFamily family = ProjectorFamily::literal) {
  if (dim <= j + 2 * n_max)
    throw std::invalid_argument("verify_b_identities: dim must exceed j + 2 n_max so every progression is resolved");
  using R = conv_result_t<F, G>;
  const double tol = detail::is_exact_v<R> ? 0.0 : 1e-10;
  const OperatorSeq p = projector_family_seq(j, dim, family);
  const OperatorSeq ap = scalar_weighted_seq(alpha, p);
  const OperatorSeq bp = scalar_weighted_seq(beta, p);
  const auto one = [](u64) { return i64{1}; };
  const auto lcm_ab = conv_product(ConvKind::lcm, alpha, beta);
  const auto uni_ab = conv_product(ConvKind::unitary, alpha, beta);
  const OperatorSeq lcm_p = scalar_weighted_seq(lcm_ab, p);
  const OperatorSeq nu0 = scalar_identity_seq(one, dim);
  const OperatorSeq lhs3 = conv_seq(ConvKind::dirichlet, nu0, lcm_p);
  const OperatorSeq na = conv_seq(ConvKind::dirichlet, nu0, ap);
  const OperatorSeq nb = conv_seq(ConvKind::dirichlet, nu0, bp);
  const std::string suffix = std::string("/") + to_string(family);

  Report rep;
  for (u64 n = 1; n <= n_max; ++n) {
    rep.add("b1" + suffix, {n}, max_deviation(op_conv(ConvKind::lcm, ap, bp, n), lcm_p(n)), tol);
    rep.add("b2" + suffix, {n},
            max_deviation(op_conv(ConvKind::unitary, ap, bp, n), detail::to_cplx(uni_ab(n)) * p(n)), tol);
    rep.add("b3" + suffix, {n}, max_deviation(lhs3(n), na(n) * nb(n)), tol);
  }
  return rep;
}

/// Proposition: N_{a,j} N_{b,j} = N_{a [lcm] b, j} and
/// N_{mu*a,j} N_{mu*b,j} = N_{mu*(ab),j} on the truncation.
template <class F, class G>
Report proposition1_check(const F& alpha, const G& beta, u64 j, std::size_t dim) {
  using R = conv_result_t<F, G>;
  Report rep;
  const auto lcm_ab = conv_product(ConvKind::lcm, alpha, beta);
  const FockOperator lhs1 = number_op(alpha, j, dim) * number_op(beta, j, dim);
  rep.add("prop1.1", {j, dim}, max_deviation(lhs1, number_op(lcm_ab, j, dim)), detail::is_exact_v<R> ? 0.0 : 1e-10);

  const auto mu = fns::mobius();
  const auto mu_a = conv_product(ConvKind::dirichlet, mu, alpha);
  const auto mu_b = conv_product(ConvKind::dirichlet, mu, beta);
  const auto mu_ab = conv_product(ConvKind::dirichlet, mu, pointwise_product(alpha, beta));
  const FockOperator lhs2 = number_op(mu_a, j, dim) * number_op(mu_b, j, dim);
  rep.add("prop1.2", {j, dim}, max_deviation(lhs2, number_op(mu_ab, j, dim)), 1e-10);
  return rep;
}

}  // namespace fockarith
