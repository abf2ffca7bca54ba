#pragma once

// Classical multiplicative number theory: factorization, the standard
// arithmetic functions, scalar convolution products and the CRT solver.
// Everything here is exact for integer-valued functions and is used as the
// ground truth for the operator-valued machinery.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fockarith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using cplx = std::complex<double>;

inline constexpr u64 kMaxArgument = static_cast<u64>(std::numeric_limits<i64>::max());

namespace detail {

inline void require_positive(u64 n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": argument must be >= 1");
  if (n > kMaxArgument) throw std::domain_error(std::string(what) + ": argument exceeds 2^63-1");
}

template <class T>
inline constexpr bool is_exact_v = std::is_integral_v<T>;

template <class T>
double magnitude(const T& v) {
  if constexpr (std::is_arithmetic_v<T>) {
    return std::abs(static_cast<double>(v));
  } else {
    return std::abs(v);
  }
}

}  // namespace detail

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division with a 2,3,5 wheel. Sufficient for the desk-scale inputs
/// used here; worst case is O(sqrt(n)).
inline std::vector<PrimePower> factorize(u64 n) {
  detail::require_positive(n, "factorize");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr u64 kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  u64 p = 7;
  for (std::size_t i = 0; p <= n / p; p += kWheel[i], i = (i + 1) % 8) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

/// All positive divisors of n in increasing order.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 lcm_checked(u64 a, u64 b) {
  const u64 g = std::gcd(a, b);
  const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > kMaxArgument) throw std::overflow_error("lcm exceeds 2^63-1");
  return static_cast<u64>(l);
}

inline int mobius(u64 n) {
  detail::require_positive(n, "mobius");
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline u64 euler_phi(u64 n) {
  detail::require_positive(n, "euler_phi");
  u64 result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

/// Number of distinct prime factors, omega(1) = 0.
inline unsigned omega(u64 n) {
  detail::require_positive(n, "omega");
  return static_cast<unsigned>(factorize(n).size());
}

/// sigma_s(n) = sum of d^s over the divisors of n, for complex s.
inline cplx sigma(cplx s, u64 n) {
  detail::require_positive(n, "sigma");
  cplx acc = 0.0;
  for (u64 d : divisors(n)) acc += std::pow(static_cast<double>(d), s);
  return acc;
}

/// Exact integer variant of sigma for non-negative integer exponents.
inline u64 sigma_int(unsigned k, u64 n) {
  detail::require_positive(n, "sigma");
  u64 acc = 0;
  for (u64 d : divisors(n)) {
    u64 t = 1;
    for (unsigned i = 0; i < k; ++i) t *= d;
    acc += t;
  }
  return acc;
}

/// M_s(n): the number of ordered s-tuples of divisors of n whose lcm is n,
/// i.e. prod over p^a || n of ((a+1)^s - a^s).
inline u64 m_count(unsigned s, u64 n) {
  if (s < 1) throw std::domain_error("m_count: s must be >= 1");
  detail::require_positive(n, "m_count");
  auto ipow = [](u64 b, unsigned e) {
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  u64 result = 1;
  for (const auto& [p, a] : factorize(n)) result *= ipow(a + 1, s) - ipow(a, s);
  return result;
}

// ---------------------------------------------------------------------------
// ArithmeticFn

/// A memoized arithmetic function N+ -> T. Copies share the memo table; the
/// table is guarded so concurrent evaluation is safe.
template <class T>
class ArithmeticFn {
 public:
  using value_type = T;

  ArithmeticFn() = default;

  explicit ArithmeticFn(std::function<T(u64)> fn, bool claimed_multiplicative = false)
      : state_(std::make_shared<State>()) {
    state_->fn = std::move(fn);
    state_->multiplicative = claimed_multiplicative;
    if (claimed_multiplicative && (*this)(1) != T(1))
      throw std::invalid_argument("ArithmeticFn: a multiplicative function must satisfy f(1) = 1");
  }

  T operator()(u64 n) const {
    detail::require_positive(n, "ArithmeticFn");
    {
      std::shared_lock lock(state_->mu);
      if (auto it = state_->memo.find(n); it != state_->memo.end()) return it->second;
    }
    T v = state_->fn(n);
    std::unique_lock lock(state_->mu);
    return state_->memo.emplace(n, v).first->second;
  }

  bool claimed_multiplicative() const { return state_->multiplicative; }

 private:
  struct State {
    std::function<T(u64)> fn;
    bool multiplicative = false;
    mutable std::shared_mutex mu;
    std::unordered_map<u64, T> memo;
  };
  std::shared_ptr<State> state_;
};

namespace fns {

inline ArithmeticFn<i64> mobius() {
  return ArithmeticFn<i64>([](u64 n) { return static_cast<i64>(fockarith::mobius(n)); }, true);
}
inline ArithmeticFn<i64> phi() {
  return ArithmeticFn<i64>([](u64 n) { return static_cast<i64>(euler_phi(n)); }, true);
}
/// nu_0: constant one.
inline ArithmeticFn<i64> nu0() {
  return ArithmeticFn<i64>([](u64) { return i64{1}; }, true);
}
/// nu_1: identity n -> n.
inline ArithmeticFn<i64> nu1() {
  return ArithmeticFn<i64>([](u64 n) { return static_cast<i64>(n); }, true);
}
/// Dirichlet unit.
inline ArithmeticFn<i64> epsilon() {
  return ArithmeticFn<i64>([](u64 n) { return i64{n == 1 ? 1 : 0}; }, true);
}
inline ArithmeticFn<i64> omega() {
  return ArithmeticFn<i64>([](u64 n) { return static_cast<i64>(fockarith::omega(n)); });
}
inline ArithmeticFn<i64> m_count(unsigned s) {
  return ArithmeticFn<i64>([s](u64 n) { return static_cast<i64>(fockarith::m_count(s, n)); }, true);
}
/// n -> n^s for complex s (n^{-s} is power(-s)).
inline ArithmeticFn<cplx> power(cplx s) {
  return ArithmeticFn<cplx>([s](u64 n) { return std::pow(static_cast<double>(n), s); }, true);
}
inline ArithmeticFn<cplx> sigma(cplx s) {
  return ArithmeticFn<cplx>([s](u64 n) { return fockarith::sigma(s, n); }, true);
}

}  // namespace fns

// ---------------------------------------------------------------------------
// Scalar convolution products. `a` and `b` may be any callables on u64.

template <class F>
using fn_result_t = std::decay_t<std::invoke_result_t<const F&, u64>>;

template <class F, class G>
using conv_result_t = std::common_type_t<fn_result_t<F>, fn_result_t<G>>;

/// (a * b)(n) = sum over kl = n of a(k) b(l).
template <class F, class G>
conv_result_t<F, G> dirichlet_conv(const F& a, const G& b, u64 n) {
  detail::require_positive(n, "dirichlet_conv");
  using R = conv_result_t<F, G>;
  R acc{};
  for (u64 k : divisors(n)) acc += static_cast<R>(a(k)) * static_cast<R>(b(n / k));
  return acc;
}

/// Sum over ordered divisor pairs (k, l) of n with lcm(k, l) = n.
template <class F, class G>
conv_result_t<F, G> lcm_conv(const F& a, const G& b, u64 n) {
  detail::require_positive(n, "lcm_conv");
  using R = conv_result_t<F, G>;
  const auto ds = divisors(n);
  R acc{};
  for (u64 k : ds)
    for (u64 l : ds)
      if (k / std::gcd(k, l) * l == n) acc += static_cast<R>(a(k)) * static_cast<R>(b(l));
  return acc;
}

/// Sum over kl = n with gcd(k, l) = 1.
template <class F, class G>
conv_result_t<F, G> unitary_conv(const F& a, const G& b, u64 n) {
  detail::require_positive(n, "unitary_conv");
  using R = conv_result_t<F, G>;
  R acc{};
  for (u64 k : divisors(n))
    if (std::gcd(k, n / k) == 1) acc += static_cast<R>(a(k)) * static_cast<R>(b(n / k));
  return acc;
}

enum class ConvKind { dirichlet, lcm, unitary };

inline const char* to_string(ConvKind k) {
  switch (k) {
    case ConvKind::dirichlet: return "dirichlet";
    case ConvKind::lcm: return "lcm";
    case ConvKind::unitary: return "unitary";
  }
  return "?";
}

template <class F, class G>
conv_result_t<F, G> scalar_conv(ConvKind kind, const F& a, const G& b, u64 n) {
  switch (kind) {
    case ConvKind::dirichlet: return dirichlet_conv(a, b, n);
    case ConvKind::lcm: return lcm_conv(a, b, n);
    case ConvKind::unitary: return unitary_conv(a, b, n);
  }
  throw std::logic_error("scalar_conv: bad kind");
}

/// The lazily evaluated product function n -> (a # b)(n).
template <class F, class G>
ArithmeticFn<conv_result_t<F, G>> conv_product(ConvKind kind, F a, G b) {
  return ArithmeticFn<conv_result_t<F, G>>(
      [kind, a = std::move(a), b = std::move(b)](u64 n) { return scalar_conv(kind, a, b, n); });
}

/// Pointwise product n -> a(n) b(n).
template <class F, class G>
ArithmeticFn<conv_result_t<F, G>> pointwise_product(F a, G b) {
  using R = conv_result_t<F, G>;
  return ArithmeticFn<R>(
      [a = std::move(a), b = std::move(b)](u64 n) { return static_cast<R>(a(n)) * static_cast<R>(b(n)); });
}

// ---------------------------------------------------------------------------
// Chinese remainder theorem

struct Congruence {
  u64 residue;
  u64 modulus;
};

/// A list of congruences x = residue (mod modulus). Residues are reduced on
/// insertion.
class CongruenceSystem {
 public:
  CongruenceSystem() = default;
  CongruenceSystem(std::initializer_list<std::pair<i64, i64>> entries) {
    for (auto [r, m] : entries) add(r, m);
  }

  CongruenceSystem& add(i64 residue, i64 modulus) {
    if (modulus < 1) throw std::invalid_argument("CongruenceSystem: modulus must be >= 1");
    i64 r = residue % modulus;
    if (r < 0) r += modulus;
    entries_.push_back({static_cast<u64>(r), static_cast<u64>(modulus)});
    return *this;
  }

  const std::vector<Congruence>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Congruence> entries_;
};

struct CrtSolution {
  u64 residue;  // 0 <= residue < modulus
  u64 modulus;  // lcm of all moduli

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Unique solution modulo the lcm of the moduli, or nullopt if the system is
/// inconsistent. Pairs are merged left to right with the extended gcd.
inline std::optional<CrtSolution> crt_solve(const CongruenceSystem& sys) {
  if (sys.empty()) throw std::invalid_argument("crt_solve: empty system");
  using i128 = __int128;
  i128 x = 0;
  i128 L = 1;
  for (const auto& c : sys.entries()) {
    const i128 m = c.modulus;
    const i128 a = c.residue;
    // Solve x + L t = a (mod m).
    i128 old_r = L % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
      const i128 q = old_r / r;
      std::tie(old_r, r) = std::pair<i128, i128>{r, old_r - q * r};
      std::tie(old_s, s) = std::pair<i128, i128>{s, old_s - q * s};
    }
    const i128 g = old_r;  // gcd(L, m)
    i128 diff = (a - x) % m;
    if (diff < 0) diff += m;
    if (diff % g != 0) return std::nullopt;
    const i128 mg = m / g;
    i128 t = (diff / g) % mg * (old_s % mg) % mg;
    if (t < 0) t += mg;
    const i128 nl = L * mg;
    if (nl > static_cast<i128>(kMaxArgument)) throw std::overflow_error("crt_solve: lcm exceeds 2^63-1");
    x = (x + L * t) % nl;
    L = nl;
  }
  return CrtSolution{static_cast<u64>(x), static_cast<u64>(L)};
}

// ---------------------------------------------------------------------------

struct PairViolation {
  u64 n;
  u64 m;
  double deviation;
};

/// Coprime pairs n <= m with nm <= n_max where a(nm) != a(n) a(m). Integer
/// valued functions are compared exactly, others with absolute tolerance.
template <class F>
std::vector<PairViolation> check_multiplicative(const F& a, u64 n_max, double tol = 1e-12) {
  using T = fn_result_t<F>;
  std::vector<PairViolation> out;
  for (u64 n = 1; n * n <= n_max; ++n) {
    for (u64 m = n; n * m <= n_max; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const T lhs = a(n * m);
      const T rhs = a(n) * a(m);
      if constexpr (detail::is_exact_v<T>) {
        if (lhs != rhs) out.push_back({n, m, detail::magnitude(lhs - rhs)});
      } else {
        const double dev = detail::magnitude(lhs - rhs);
        if (dev > tol) out.push_back({n, m, dev});
      }
    }
  }
  return out;
}

}  // namespace fockarith
