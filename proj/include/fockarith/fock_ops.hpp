#pragma once

#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <set>
#include <unordered_map>

#include "fockarith/arith.hpp"
#include "fockarith/fock_operator.hpp"

namespace fockarith {

/// normalized: indices m with m = j (mod n).
/// literal:    indices j, j + n, j + 2n, ... (starts at j even if j >= n).
enum class ProjectorMode { normalized, literal };

/// Index range used for k in the Ramanujan-type operators: the printed
/// 1 <= k <= n, or residues 0 <= k < n. They differ only at n = 1.
enum class CoprimeRange { one_to_n, zero_to_n_minus_1 };

namespace detail {

template <class T>
cplx to_cplx(const T& v) {
  if constexpr (std::is_same_v<T, cplx>) {
    return v;
  } else {
    return cplx(static_cast<double>(v), 0.0);
  }
}

inline std::size_t checked_dim(std::size_t dim, const char* what) {
  if (dim < 1) throw std::invalid_argument(std::string(what) + ": dim must be >= 1");
  return dim;
}

inline std::vector<u64> coprime_ks(u64 n, CoprimeRange range) {
  std::vector<u64> ks;
  const u64 lo = range == CoprimeRange::one_to_n ? 1 : 0;
  const u64 hi = range == CoprimeRange::one_to_n ? n : n - 1;
  for (u64 k = lo; k <= hi; ++k)
    if (std::gcd(k, n) == 1) ks.push_back(k);
  return ks;
}

}  // namespace detail

/// exp(2 pi i k / n) with k reduced mod n. Quarter turns are exact.
inline cplx root_of_unity(i64 k, u64 n) {
  if (n == 0) throw std::domain_error("root_of_unity: n must be >= 1");
  const i64 nn = static_cast<i64>(n);
  i64 r = k % nn;
  if (r < 0) r += nn;
  if ((4 * r) % nn == 0) {
    switch ((4 * r) / nn) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

inline FockOperator projector(u64 j, u64 n, std::size_t dim, ProjectorMode mode) {
  if (n < 1) throw std::domain_error("projector: n must be >= 1");
  std::vector<cplx> d(detail::checked_dim(dim, "projector"), 0.0);
  const u64 start = mode == ProjectorMode::normalized ? j % n : j;
  for (u64 m = start; m < dim; m += n) d[m] = 1.0;
  return FockOperator::diagonal(std::move(d));
}

/// Pi_j(k) - |j><j|, i.e. indices j + k, j + 2k, ...
inline FockOperator projector_bar(u64 j, u64 k, std::size_t dim) {
  if (k < 1) throw std::domain_error("projector_bar: k must be >= 1");
  std::vector<cplx> d(detail::checked_dim(dim, "projector_bar"), 0.0);
  if (j < dim)
    for (u64 m = j + k; m < dim; m += k) d[m] = 1.0;
  return FockOperator::diagonal(std::move(d));
}

/// The rotated operator S_n: eps_n^(m mod n) on |m>.
inline FockOperator rotated(u64 n, std::size_t dim) {
  if (n < 1) throw std::domain_error("rotated: n must be >= 1");
  std::vector<cplx> d(dim);
  for (std::size_t m = 0; m < dim; ++m) d[m] = root_of_unity(static_cast<i64>(m % n), n);
  return FockOperator::diagonal(std::move(d));
}

/// (1/n) sum_k eps_n^(-kj) S_n^k, built from powers of S_n.
inline FockOperator projector_from_rotated(u64 j, u64 n, std::size_t dim) {
  if (n < 1 || j >= n) throw std::domain_error("projector_from_rotated: need 0 <= j < n");
  const FockOperator s = rotated(n, dim);
  FockOperator sk = FockOperator::identity(dim);
  FockOperator acc = FockOperator::zero(dim);
  for (u64 k = 0; k < n; ++k) {
    acc = acc + root_of_unity(-static_cast<i64>((k * j) % n), n) * sk;
    sk = sk * s;
  }
  return (1.0 / static_cast<double>(n)) * acc;
}

struct Theorem1Outcome {
  FockOperator product;
  FockOperator predicted;
  std::optional<CrtSolution> crt;  // nullopt when gcd(n, m) does not divide l - k
  bool agrees;
};

/// Pi_k(n) Pi_l(m) against the CRT prediction Pi_j(lcm(n, m)) or zero.
inline Theorem1Outcome theorem1_product(u64 k, u64 n, u64 l, u64 m, std::size_t dim) {
  if (n < 1 || m < 1 || k >= n || l >= m)
    throw std::domain_error("theorem1_product: need 0 <= k < n and 0 <= l < m");
  FockOperator product = projector(k, n, dim, ProjectorMode::normalized) * projector(l, m, dim, ProjectorMode::normalized);
  CongruenceSystem sys;
  sys.add(static_cast<i64>(k), static_cast<i64>(n)).add(static_cast<i64>(l), static_cast<i64>(m));
  auto crt = crt_solve(sys);
  FockOperator predicted =
      crt ? projector(crt->residue, crt->modulus, dim, ProjectorMode::normalized) : FockOperator::zero(dim);
  const bool agrees = exactly_equal(product, predicted);
  return {std::move(product), std::move(predicted), crt, agrees};
}

struct ProgressionSplit {
  FockOperator lhs;
  FockOperator rhs;
  bool exact;               // lhs == rhs entrywise
  bool index_sets_agree;    // k = 0..r-1 and k = 1..r give the same residues mod nr
};

/// Pi_j(n) = sum over r consecutive k of Pi_{j + kn}(nr).
inline ProgressionSplit progression_split(u64 j, u64 n, u64 r, std::size_t dim) {
  if (n < 1 || r < 1 || j >= n) throw std::domain_error("progression_split: need 0 <= j < n, r >= 1");
  const u64 nr = n * r;
  std::set<u64> from_zero, from_one;
  for (u64 k = 0; k < r; ++k) from_zero.insert((j + k * n) % nr);
  for (u64 k = 1; k <= r; ++k) from_one.insert((j + k * n) % nr);
  FockOperator rhs = FockOperator::zero(dim);
  for (u64 res : from_one) rhs = rhs + projector(res, nr, dim, ProjectorMode::normalized);
  FockOperator lhs = projector(j, n, dim, ProjectorMode::normalized);
  const bool exact = exactly_equal(lhs, rhs);
  return {std::move(lhs), std::move(rhs), exact, from_zero == from_one};
}

/// E_+ on the truncation.
inline FockOperator phase_up(std::size_t dim) { return FockOperator::up_shift(dim); }
/// E_- = E_+^dagger.
inline FockOperator phase_down(std::size_t dim) { return FockOperator::down_shift(dim); }

/// Diagonal entry of C_j(n) at index m: sum over coprime k of eps_n^(k(m - j)).
inline cplx ramanujan_c_entry(u64 j, u64 n, u64 m, CoprimeRange range = CoprimeRange::one_to_n) {
  const u64 shift = (m % n + n - j % n) % n;
  cplx acc = 0.0;
  for (u64 k : detail::coprime_ks(n, range)) acc += root_of_unity(static_cast<i64>((k * shift) % n), n);
  return acc;
}

/// C_j(n) = sum over coprime k of eps_n^(-kj) S_n^k.
inline FockOperator ramanujan_c(u64 j, u64 n, std::size_t dim, CoprimeRange range = CoprimeRange::one_to_n) {
  if (n < 1) throw std::domain_error("ramanujan_c: n must be >= 1");
  std::vector<cplx> d(dim);
  // The diagonal is periodic in m with period n.
  std::vector<cplx> period(std::min<u64>(n, dim));
  for (u64 r = 0; r < period.size(); ++r) period[r] = ramanujan_c_entry(j, n, r, range);
  for (std::size_t m = 0; m < dim; ++m) d[m] = period[m % n];
  return FockOperator::diagonal(std::move(d));
}

/// T_j(n) = sum over coprime k of eps_n^(kj) Pi_{j+k}(n), literal projectors.
inline FockOperator ramanujan_t(u64 j, u64 n, std::size_t dim, CoprimeRange range = CoprimeRange::one_to_n) {
  if (n < 1) throw std::domain_error("ramanujan_t: n must be >= 1");
  std::vector<cplx> d(dim, 0.0);
  for (u64 k : detail::coprime_ks(n, range)) {
    const cplx w = root_of_unity(static_cast<i64>((k * (j % n)) % n), n);
    for (u64 m = j + k; m < dim; m += n) d[m] += w;
  }
  return FockOperator::diagonal(std::move(d));
}

/// N_{alpha,j}: 0 on |0..j>, (nu_0 * alpha)(m - j) on |m> for m > j.
template <class F>
FockOperator number_op(const F& alpha, u64 j, std::size_t dim) {
  std::vector<cplx> d(detail::checked_dim(dim, "number_op"), 0.0);
  const auto one = [](u64) { return i64{1}; };
  for (u64 m = j + 1; m < dim; ++m) d[m] = detail::to_cplx(dirichlet_conv(one, alpha, m - j));
  return FockOperator::diagonal(std::move(d));
}

/// The defining series sum_{k=1}^{dim} alpha(k) Pibar_j(k). Terms with
/// k >= dim vanish on the truncation, so this is the full sum.
template <class F>
FockOperator number_op_series(const F& alpha, u64 j, std::size_t dim) {
  FockOperator acc = FockOperator::zero(dim);
  for (u64 k = 1; k <= dim; ++k) acc = acc + detail::to_cplx(alpha(k)) * projector_bar(j, k, dim);
  return acc;
}

/// The generalized zeta operator N_{n^-s, 0}.
inline FockOperator zeta_op(cplx s, std::size_t dim) { return number_op(fns::power(-s), 0, dim); }

// ---------------------------------------------------------------------------

/// An extended arithmetic function n -> FockOperator at fixed dimension,
/// evaluated lazily and memoized. Copies share the memo.
class OperatorSeq {
 public:
  OperatorSeq(std::size_t dim, std::function<FockOperator(u64)> gen)
      : dim_(dim), state_(std::make_shared<State>()) {
    if (dim < 1) throw std::invalid_argument("OperatorSeq: dimension must be >= 1");
    state_->gen = std::move(gen);
  }

  std::size_t dim() const { return dim_; }

  const FockOperator& operator()(u64 n) const {
    if (n < 1) throw std::domain_error("OperatorSeq: n must be >= 1");
    std::lock_guard lock(state_->mu);
    if (auto it = state_->memo.find(n); it != state_->memo.end()) return it->second;
    FockOperator op = state_->gen(n);
    if (op.dim() != dim_) throw DimensionMismatch(dim_, op.dim());
    return state_->memo.emplace(n, std::move(op)).first->second;
  }

 private:
  struct State {
    std::function<FockOperator(u64)> gen;
    std::mutex mu;
    std::unordered_map<u64, FockOperator> memo;
  };
  std::size_t dim_;
  std::shared_ptr<State> state_;
};

inline OperatorSeq projector_seq(u64 j, std::size_t dim, ProjectorMode mode) {
  return OperatorSeq(dim, [=](u64 n) { return projector(j, n, dim, mode); });
}

inline OperatorSeq projector_bar_seq(u64 j, std::size_t dim) {
  return OperatorSeq(dim, [=](u64 n) { return projector_bar(j, n, dim); });
}

}  // namespace fockarith
