#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "fockarith/arith.hpp"
#include "oracle.hpp"

using namespace fockarith;

TEST(Arith, MobiusExamples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_THROW(mobius(0), std::domain_error);
}

TEST(Arith, PhiExamples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  for (u64 p : {2, 3, 5, 7, 97, 7919}) EXPECT_EQ(euler_phi(p), p - 1);
  EXPECT_THROW(euler_phi(0), std::domain_error);
}

TEST(Arith, SigmaExamples) {
  EXPECT_EQ(sigma(1.0, 6), cplx(12.0));
  EXPECT_EQ(sigma(2.0, 4), cplx(21.0));
  for (u64 n = 1; n <= 60; ++n) EXPECT_EQ(sigma(0.0, n), cplx(static_cast<double>(oracle::divisors(n).size())));
  EXPECT_EQ(sigma_int(1, 6), 12u);
  EXPECT_THROW(sigma(1.0, 0), std::domain_error);
}

TEST(Arith, OmegaExamples) {
  EXPECT_EQ(omega(1), 0u);
  EXPECT_EQ(omega(12), 2u);
  EXPECT_EQ(omega(30), 3u);
  EXPECT_THROW(omega(0), std::domain_error);
}

TEST(Arith, AgreesWithBruteForceOracles) {
  for (u64 n = 1; n <= 400; ++n) {
    ASSERT_EQ(mobius(n), oracle::mobius(n)) << n;
    ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
    ASSERT_EQ(omega(n), oracle::omega(n)) << n;
    ASSERT_EQ(divisors(n), oracle::divisors(n)) << n;
    ASSERT_EQ(sigma_int(2, n), oracle::sigma(2, n)) << n;
  }
}

TEST(Arith, FactorizeReassembles) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const u64 n = rng() % 1'000'000'000'000ULL + 1;
    u64 prod = 1;
    for (const auto& [p, a] : factorize(n))
      for (unsigned e = 0; e < a; ++e) prod *= p;
    EXPECT_EQ(prod, n);
  }
  EXPECT_TRUE(factorize(1).empty());
}

TEST(Arith, DirichletExamples) {
  const auto nu0 = fns::nu0();
  const auto phi = fns::phi();
  EXPECT_EQ(dirichlet_conv(nu0, phi, 12), 12);
  for (u64 n = 1; n <= 50; ++n) EXPECT_EQ(dirichlet_conv(fns::mobius(), nu0, n), n == 1 ? 1 : 0);
  auto a = [](u64 n) { return static_cast<i64>(3 * n + 2); };
  auto b = [](u64 n) { return static_cast<i64>(n * n - 7); };
  EXPECT_EQ(dirichlet_conv(a, b, 1), a(1) * b(1));
  EXPECT_THROW(dirichlet_conv(a, b, 0), std::domain_error);
}

TEST(Arith, LcmExamples) {
  const auto nu0 = fns::nu0();
  EXPECT_EQ(lcm_conv(nu0, nu0, 12), 15);
  for (u64 p : {2, 3, 5, 101}) EXPECT_EQ(lcm_conv(nu0, nu0, p), 3);
  auto a = [](u64 n) { return static_cast<i64>(n + 4); };
  EXPECT_EQ(lcm_conv(a, a, 1), 25);
  EXPECT_THROW(lcm_conv(a, a, 0), std::domain_error);
}

TEST(Arith, UnitaryExamples) {
  const auto nu0 = fns::nu0();
  EXPECT_EQ(unitary_conv(nu0, nu0, 12), 4);
  EXPECT_EQ(unitary_conv(nu0, nu0, 8), 2);
  auto a = [](u64 n) { return static_cast<i64>(n + 4); };
  EXPECT_EQ(unitary_conv(a, a, 1), 25);
  EXPECT_THROW(unitary_conv(a, a, 0), std::domain_error);
}

TEST(Arith, MCountExamples) {
  EXPECT_EQ(m_count(2, 12), 15u);
  for (unsigned s = 1; s <= 5; ++s) EXPECT_EQ(m_count(s, 1), 1u);
  EXPECT_EQ(m_count(3, 4), 19u);
  EXPECT_EQ(oracle::lcm_tuples(3, 4), 19u);
  EXPECT_THROW(m_count(0, 4), std::domain_error);
  EXPECT_THROW(m_count(2, 0), std::domain_error);
}

TEST(Arith, CrtExamples) {
  EXPECT_EQ(crt_solve({{1, 2}, {2, 3}}), (CrtSolution{5, 6}));
  EXPECT_FALSE(crt_solve({{0, 2}, {1, 2}}).has_value());
  EXPECT_EQ(crt_solve({{7, 1}}), (CrtSolution{0, 1}));
  EXPECT_THROW(crt_solve(CongruenceSystem{}), std::invalid_argument);
  EXPECT_THROW(CongruenceSystem().add(1, 0), std::invalid_argument);
  EXPECT_EQ(crt_solve({{-1, 5}}), (CrtSolution{4, 5}));
}

TEST(Arith, CrtOverflowIsReported) {
  CongruenceSystem sys;
  for (i64 p : {1000003, 1000033, 1000037, 1000039}) sys.add(1, p);
  EXPECT_THROW(crt_solve(sys), std::overflow_error);
}

TEST(Arith, CrtMatchesExhaustiveScan) {
  for (u64 n = 1; n <= 30; ++n)
    for (u64 m = 1; m <= 30; ++m)
      for (u64 a = 0; a < n; ++a)
        for (u64 b = 0; b < m; ++b) {
          const auto got = crt_solve({{static_cast<i64>(a), static_cast<i64>(n)}, {static_cast<i64>(b), static_cast<i64>(m)}});
          const i64 want = oracle::crt_scan(a, n, b, m);
          if (want < 0) {
            ASSERT_FALSE(got.has_value()) << a << " mod " << n << ", " << b << " mod " << m;
          } else {
            ASSERT_TRUE(got.has_value());
            ASSERT_EQ(got->residue, static_cast<u64>(want));
            ASSERT_EQ(got->modulus, std::lcm(n, m));
          }
        }
}

TEST(Arith, CheckMultiplicativeExamples) {
  EXPECT_TRUE(check_multiplicative(fns::mobius(), 100).empty());
  EXPECT_TRUE(check_multiplicative(fns::sigma(1.0), 100).empty());
  const auto v = check_multiplicative([](u64 n) { return static_cast<i64>(n + 1); }, 10);
  const bool has23 = std::any_of(v.begin(), v.end(), [](const PairViolation& p) { return p.n == 2 && p.m == 3; });
  EXPECT_TRUE(has23);
}

TEST(Arith, ClaimedMultiplicativeNeedsOneAtOne) {
  EXPECT_THROW(ArithmeticFn<i64>([](u64) { return i64{2}; }, true), std::invalid_argument);
  EXPECT_NO_THROW(ArithmeticFn<i64>([](u64) { return i64{2}; }, false));
}

TEST(Arith, MemoIsSharedAndThreadSafe) {
  std::atomic<int> calls{0};
  ArithmeticFn<i64> f([&](u64 n) {
    ++calls;
    return static_cast<i64>(oracle::phi(n));
  });
  std::vector<std::vector<i64>> seen(8);
  {
    std::vector<std::jthread> ts;
    for (int t = 0; t < 8; ++t)
      ts.emplace_back([&, t] {
        for (u64 n = 1; n <= 300; ++n) seen[t].push_back(f(n));
      });
  }
  for (int t = 1; t < 8; ++t) EXPECT_EQ(seen[t], seen[0]);
  const int after = calls.load();
  const auto copy = f;
  for (u64 n = 1; n <= 300; ++n) copy(n);
  EXPECT_EQ(calls.load(), after);
}

// Identities swept to 10^4.

TEST(ArithSweep, MobiusInversion) {
  const auto mu = fns::mobius();
  const auto nu0 = fns::nu0();
  for (u64 n = 1; n <= 10000; ++n) ASSERT_EQ(dirichlet_conv(mu, nu0, n), n == 1 ? 1 : 0) << n;
}

TEST(ArithSweep, EulerIdentity) {
  const auto phi = fns::phi();
  const auto nu0 = fns::nu0();
  for (u64 n = 1; n <= 10000; ++n) ASSERT_EQ(dirichlet_conv(nu0, phi, n), static_cast<i64>(n)) << n;
}

TEST(ArithSweep, LcmCountsPairs) {
  const auto nu0 = fns::nu0();
  for (u64 n = 1; n <= 10000; ++n) ASSERT_EQ(lcm_conv(nu0, nu0, n), static_cast<i64>(m_count(2, n))) << n;
}

TEST(ArithSweep, TriplesMatchTupleOracle) {
  const auto nu0 = fns::nu0();
  const auto pair = conv_product(ConvKind::lcm, nu0, nu0);
  for (u64 n = 1; n <= 500; ++n) {
    const u64 want = oracle::lcm_tuples(3, n);
    ASSERT_EQ(m_count(3, n), want) << n;
    ASSERT_EQ(lcm_conv(pair, nu0, n), static_cast<i64>(want)) << n;
  }
}

TEST(ArithSweep, UnitaryCountsTwoToOmega) {
  const auto nu0 = fns::nu0();
  for (u64 n = 1; n <= 10000; ++n) ASSERT_EQ(unitary_conv(nu0, nu0, n), i64{1} << omega(n)) << n;
}

TEST(ArithSweep, ConvolutionsCommutativeAndAssociative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> val(-20, 20);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<i64> ta(201), tb(201), tc(201);
    for (auto* t : {&ta, &tb, &tc})
      for (auto& x : *t) x = val(rng);
    auto a = [&](u64 n) { return ta[n]; };
    auto b = [&](u64 n) { return tb[n]; };
    auto c = [&](u64 n) { return tc[n]; };
    for (ConvKind k : {ConvKind::dirichlet, ConvKind::lcm, ConvKind::unitary}) {
      const auto ab = conv_product(k, a, b);
      const auto bc = conv_product(k, b, c);
      for (u64 n = 1; n <= 200; ++n) {
        ASSERT_EQ(scalar_conv(k, a, b, n), scalar_conv(k, b, a, n)) << to_string(k) << " n=" << n;
        ASSERT_EQ(scalar_conv(k, ab, c, n), scalar_conv(k, a, bc, n)) << to_string(k) << " n=" << n;
      }
    }
  }
}
