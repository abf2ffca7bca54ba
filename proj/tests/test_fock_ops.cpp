#include <gtest/gtest.h>

#include <numbers>

#include "fockarith/conv_algebra.hpp"
#include "fockarith/verify.hpp"
#include "fockarith/fock_ops.hpp"
#include "oracle.hpp"

using namespace fockarith;

namespace {

std::vector<cplx> diag(std::initializer_list<double> v) { return std::vector<cplx>(v.begin(), v.end()); }

std::vector<std::size_t> ones_at(const FockOperator& op) {
  std::vector<std::size_t> idx;
  const auto& d = op.diagonal_values();
  for (std::size_t m = 0; m < d.size(); ++m)
    if (d[m] == cplx(1.0)) idx.push_back(m);
    else EXPECT_EQ(d[m], cplx(0.0)) << "index " << m;
  return idx;
}

}  // namespace

TEST(Projector, Examples) {
  for (auto mode : {ProjectorMode::normalized, ProjectorMode::literal})
    EXPECT_TRUE(exactly_equal(projector(0, 1, 7, mode), FockOperator::identity(7)));
  EXPECT_EQ(projector(2, 3, 8, ProjectorMode::normalized).diagonal_values(), diag({0, 0, 1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(ones_at(projector(5, 3, 8, ProjectorMode::normalized)), (std::vector<std::size_t>{2, 5}));
  EXPECT_EQ(ones_at(projector(5, 3, 8, ProjectorMode::literal)), (std::vector<std::size_t>{5}));
  EXPECT_THROW(projector(0, 0, 4, ProjectorMode::normalized), std::domain_error);
  EXPECT_THROW(projector(0, 1, 0, ProjectorMode::normalized), std::invalid_argument);
}

TEST(Projector, ModesCoincideBelowModulus) {
  for (u64 n = 1; n <= 12; ++n)
    for (u64 j = 0; j < n; ++j)
      EXPECT_TRUE(exactly_equal(projector(j, n, 40, ProjectorMode::normalized), projector(j, n, 40, ProjectorMode::literal)));
}

TEST(ProjectorBar, Examples) {
  EXPECT_EQ(projector_bar(0, 2, 6).diagonal_values(), diag({0, 0, 1, 0, 1, 0}));
  EXPECT_TRUE(exactly_equal(projector_bar(9, 2, 6), FockOperator::zero(6)));
  EXPECT_EQ(ones_at(projector_bar(1, 3, 9)), (std::vector<std::size_t>{4, 7}));
  EXPECT_THROW(projector_bar(0, 0, 4), std::domain_error);
}

TEST(Rotated, Examples) {
  EXPECT_TRUE(exactly_equal(rotated(1, 5), FockOperator::identity(5)));
  EXPECT_EQ(rotated(2, 4).diagonal_values(), diag({1, -1, 1, -1}));
  EXPECT_THROW(rotated(0, 4), std::domain_error);
  const auto s4 = rotated(4, 8);
  EXPECT_EQ(s4.diagonal_values()[1], cplx(0.0, 1.0));
  EXPECT_EQ(s4.diagonal_values()[3], cplx(0.0, -1.0));
}

TEST(Rotated, UnitaryAndPeriodic) {
  for (u64 n = 1; n <= 64; ++n) {
    const auto s = rotated(n, 200);
    EXPECT_LE(max_deviation(s * adjoint(s), FockOperator::identity(200)), 1e-12) << n;
    EXPECT_LE(max_deviation(power(s, static_cast<unsigned>(n)), FockOperator::identity(200)), 1e-12) << n;
  }
}

TEST(Rotated, IsPhaseWeightedProjectorSum) {
  for (u64 n = 1; n <= 16; ++n) {
    FockOperator acc = FockOperator::zero(50);
    for (u64 s = 0; s < n; ++s)
      acc = acc + std::polar(1.0, 2.0 * std::numbers::pi * double(s) / double(n)) * projector(s, n, 50, ProjectorMode::normalized);
    EXPECT_LE(max_deviation(acc, rotated(n, 50)), 1e-12) << n;
  }
}

TEST(Rotated, InversionRecoversProjector) {
  EXPECT_LE(max_deviation(projector_from_rotated(0, 1, 6), FockOperator::identity(6)), 1e-12);
  EXPECT_LE(max_deviation(projector_from_rotated(1, 2, 4), FockOperator::diagonal(diag({0, 1, 0, 1}))), 1e-12);
  EXPECT_LE(max_deviation(projector_from_rotated(2, 3, 9), projector(2, 3, 9, ProjectorMode::normalized)), 1e-12);
  EXPECT_THROW(projector_from_rotated(3, 3, 9), std::domain_error);
  for (u64 n = 1; n <= 24; ++n)
    for (u64 j = 0; j < n; ++j)
      ASSERT_LE(max_deviation(projector_from_rotated(j, n, 60), projector(j, n, 60, ProjectorMode::normalized)), 1e-12);
}

TEST(Theorem1, Examples) {
  const auto a = theorem1_product(1, 2, 2, 3, 12);
  EXPECT_TRUE(a.agrees);
  ASSERT_TRUE(a.crt.has_value());
  EXPECT_EQ(a.crt->residue, 5u);
  EXPECT_TRUE(exactly_equal(a.product, projector(5, 6, 12, ProjectorMode::normalized)));

  const auto b = theorem1_product(0, 2, 1, 2, 8);
  EXPECT_TRUE(b.agrees);
  EXPECT_FALSE(b.crt.has_value());
  EXPECT_TRUE(exactly_equal(b.product, FockOperator::zero(8)));

  const auto c = theorem1_product(3, 5, 3, 5, 30);
  EXPECT_TRUE(exactly_equal(c.product, projector(3, 5, 30, ProjectorMode::normalized)));
  EXPECT_THROW(theorem1_product(2, 2, 0, 3, 10), std::domain_error);
}

TEST(Theorem1, AllResiduePairsUpTo24) {
  for (u64 n = 1; n <= 24; ++n)
    for (u64 m = 1; m <= 24; ++m) {
      const std::size_t d = 4 * std::lcm(n, m);
      for (u64 k = 0; k < n; ++k)
        for (u64 l = 0; l < m; ++l) {
          const auto out = theorem1_product(k, n, l, m, d);
          ASSERT_TRUE(out.agrees) << k << " mod " << n << ", " << l << " mod " << m;
          // Independent check against the scan.
          const i64 x = oracle::crt_scan(k, n, l, m);
          ASSERT_EQ(out.crt.has_value(), x >= 0);
        }
    }
}

TEST(Projector, CompletenessAndOrthogonality) {
  for (std::size_t d : {1, 2, 3, 7, 16, 63, 64, 65, 127, 200, 511, 512})
    for (u64 n = 1; n <= 64; ++n) {
      FockOperator sum = FockOperator::zero(d);
      for (u64 j = 0; j < n; ++j) sum = sum + projector(j, n, d, ProjectorMode::normalized);
      ASSERT_TRUE(exactly_equal(sum, FockOperator::identity(d))) << "n=" << n << " D=" << d;
    }
  for (u64 n = 1; n <= 32; ++n)
    for (u64 i = 0; i < n; ++i)
      for (u64 j = 0; j < n; ++j) {
        const auto pj = projector(j, n, 70, ProjectorMode::normalized);
        const auto prod = projector(i, n, 70, ProjectorMode::normalized) * pj;
        ASSERT_TRUE(exactly_equal(prod, i == j ? pj : FockOperator::zero(70)));
      }
}

TEST(Projector, PrimePowerSplitting) {
  for (u64 n = 1; n <= 360; ++n) {
    const std::size_t d = 2 * n + 3;
    for (u64 j = 0; j < n; j += std::max<u64>(1, n / 17)) {
      FockOperator prod = FockOperator::identity(d);
      for (const auto& [p, a] : factorize(n)) {
        u64 q = 1;
        for (unsigned e = 0; e < a; ++e) q *= p;
        prod = prod * projector(j % q, q, d, ProjectorMode::normalized);
      }
      ASSERT_TRUE(exactly_equal(prod, projector(j, n, d, ProjectorMode::normalized))) << j << " mod " << n;
    }
  }
}

TEST(Progression, Examples) {
  const auto a = progression_split(0, 2, 2, 8);
  EXPECT_TRUE(a.exact && a.index_sets_agree);
  EXPECT_TRUE(exactly_equal(a.rhs, projector(0, 4, 8, ProjectorMode::normalized) + projector(2, 4, 8, ProjectorMode::normalized)));
  EXPECT_TRUE(progression_split(3, 5, 1, 20).exact);
  const auto c = progression_split(1, 2, 3, 12);
  EXPECT_TRUE(c.exact);
  EXPECT_TRUE(exactly_equal(c.rhs, projector(1, 6, 12, ProjectorMode::normalized) + projector(3, 6, 12, ProjectorMode::normalized) +
                                       projector(5, 6, 12, ProjectorMode::normalized)));
  EXPECT_THROW(progression_split(2, 2, 3, 12), std::domain_error);
}

TEST(Phase, TruncationBoundary) {
  const std::size_t d = 9;
  std::vector<cplx> top(d, 1.0), vac(d, 1.0);
  top[d - 1] = 0.0;
  vac[0] = 0.0;
  EXPECT_TRUE(exactly_equal(phase_down(d) * phase_up(d), FockOperator::diagonal(top)));
  EXPECT_TRUE(exactly_equal(phase_up(d) * phase_down(d), FockOperator::diagonal(vac)));
  const std::vector<cplx> e2 = {0, 0, 1, 0, 0};
  EXPECT_EQ(fockarith::apply(phase_up(5), e2), (std::vector<cplx>{0, 0, 0, 1, 0}));
  EXPECT_TRUE(exactly_equal(adjoint(phase_up(7)), phase_down(7)));
  EXPECT_EQ(adjoint(phase_up(7)).kind(), ReprKind::down_shift);
}

TEST(Ramanujan, CExamples) {
  EXPECT_TRUE(exactly_equal(ramanujan_c(0, 1, 6), FockOperator::identity(6)));
  EXPECT_LE(std::abs(ramanujan_c(0, 4, 8).diagonal_values()[0] - cplx(2.0)), 1e-12);
  EXPECT_LE(std::abs(ramanujan_c(0, 6, 8).diagonal_values()[1] - cplx(1.0)), 1e-12);
  EXPECT_THROW(ramanujan_c(0, 0, 8), std::domain_error);
}

TEST(Ramanujan, CEntriesAreRamanujanSums) {
  for (u64 n = 1; n <= 30; ++n) {
    const auto c = ramanujan_c(0, n, 61);
    for (u64 m = 0; m < 61; ++m) ASSERT_NEAR(c.diagonal_values()[m].real(), oracle::ramanujan_sum(n, m), 1e-10);
  }
}

TEST(Ramanujan, CIsPhaseWeightedRotatedPowers) {
  for (u64 n = 1; n <= 12; ++n)
    for (u64 j = 0; j < 3; ++j) {
      FockOperator acc = FockOperator::zero(40);
      const auto s = rotated(n, 40);
      for (u64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
          acc = acc + std::polar(1.0, -2.0 * std::numbers::pi * double(k * j) / double(n)) * power(s, static_cast<unsigned>(k));
      ASSERT_LE(max_deviation(acc, ramanujan_c(j, n, 40)), 1e-12) << n << ' ' << j;
    }
}

TEST(Ramanujan, TExamples) {
  EXPECT_EQ(ramanujan_t(0, 2, 6).diagonal_values(), diag({0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(ramanujan_t(0, 1, 5).diagonal_values(), diag({0, 1, 1, 1, 1}));
  EXPECT_EQ(ramanujan_t(0, 1, 5, CoprimeRange::zero_to_n_minus_1).diagonal_values(), diag({1, 1, 1, 1, 1}));
  EXPECT_LE(max_deviation(ramanujan_t(1, 2, 6), FockOperator::diagonal(diag({0, 0, -1, 0, -1, 0}))), 1e-15);
}

// C_j = mu * nu_1 Pi_j and T_j = nu_0 * mu Pi_j: exact at j = 0, not beyond.
TEST(Ramanujan, DecompositionDomain) {
  SuiteOptions o;
  o.n_max = 12;
  o.js = {0};
  EXPECT_TRUE(suites::ramanujan(o).passed());
  o.js = {1};
  const Report r = suites::ramanujan(o);
  EXPECT_FALSE(r.passed());
}

TEST(NumberOp, Examples) {
  const auto n = number_op(fns::phi(), 0, 16);
  for (std::size_t m = 0; m < 16; ++m) EXPECT_EQ(n.diagonal_values()[m], cplx(double(m)));
  const auto z = zeta_op(1.0, 10);
  EXPECT_NEAR(z.diagonal_values()[6].real(), 2.0, 1e-15);
  EXPECT_TRUE(exactly_equal(number_op(fns::mobius(), 12, 12), FockOperator::zero(12)));
  EXPECT_EQ(z.diagonal_values()[0], cplx(0.0));
}

TEST(NumberOp, MatchesDefiningSeries) {
  for (u64 j : {0, 1, 2, 5})
    for (std::size_t d : {1, 2, 17, 64}) {
      EXPECT_TRUE(exactly_equal(number_op(fns::phi(), j, d), number_op_series(fns::phi(), j, d)));
      EXPECT_TRUE(exactly_equal(number_op(fns::mobius(), j, d), number_op_series(fns::mobius(), j, d)));
      EXPECT_TRUE(exactly_equal(number_op(fns::omega(), j, d), number_op_series(fns::omega(), j, d)));
    }
}

TEST(OperatorAlgebra, Examples) {
  const auto a = ramanujan_c(1, 5, 8);
  EXPECT_TRUE(exactly_equal(FockOperator::identity(8) * a, a));
  const std::vector<cplx> ones(4, 1.0);
  EXPECT_EQ(fockarith::apply(projector(1, 2, 4, ProjectorMode::normalized), ones), diag({0, 1, 0, 1}));
  EXPECT_THROW(FockOperator::identity(3) * FockOperator::identity(4), DimensionMismatch);
  EXPECT_THROW(FockOperator::identity(3) + FockOperator::identity(4), DimensionMismatch);
  EXPECT_TRUE((FockOperator::identity(3) * FockOperator::identity(3)).is_diagonal());
}

TEST(OperatorAlgebra, SparseProductsMatchDense) {
  const std::size_t d = 6;
  const auto up = phase_up(d), down = phase_down(d), s = rotated(3, d);
  auto dense = [&](const FockOperator& x, const FockOperator& y) {
    std::vector<SparseEntry> e;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += x.at(r, k) * y.at(k, c);
        e.push_back({r, c, acc});
      }
    return FockOperator::sparse(d, e);
  };
  for (const auto* x : {&up, &down, &s})
    for (const auto* y : {&up, &down, &s}) EXPECT_LE(max_deviation(*x * *y, dense(*x, *y)), 1e-15);
}

TEST(OperatorSeq, DimensionChecked) {
  const OperatorSeq bad(4, [](u64) { return FockOperator::identity(5); });
  EXPECT_THROW(bad(1), DimensionMismatch);
  EXPECT_THROW(OperatorSeq(0, [](u64) { return FockOperator::identity(1); }), std::invalid_argument);
  const auto p = projector_seq(0, 10, ProjectorMode::normalized);
  EXPECT_THROW(p(0), std::domain_error);
  EXPECT_EQ(&p(3), &p(3));
}
