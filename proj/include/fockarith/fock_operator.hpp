#pragma once

// FockOperator: a complex operator on the truncated number basis
// |0>, ..., |D-1>. Diagonal and shift operators keep a compact form; anything
// else falls back to a sorted sparse triplet list.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fockarith/arith.hpp"

namespace fockarith {

struct Diagonal {
  std::vector<cplx> values;
};
/// |m> -> |m+1>; the image of |D-1> is dropped.
struct UpShift {};
/// |m+1> -> |m>, |0> -> 0.
struct DownShift {};
struct SparseEntry {
  std::size_t row;
  std::size_t col;
  cplx value;
};
/// Sorted by (row, col), no duplicates, no stored zeros.
struct Sparse {
  std::vector<SparseEntry> entries;
};

enum class ReprKind { diagonal, up_shift, down_shift, sparse };

inline const char* to_string(ReprKind k) {
  switch (k) {
    case ReprKind::diagonal: return "diagonal";
    case ReprKind::up_shift: return "up_shift";
    case ReprKind::down_shift: return "down_shift";
    case ReprKind::sparse: return "sparse";
  }
  return "?";
}

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class FockOperator {
 public:
  using Repr = std::variant<Diagonal, UpShift, DownShift, Sparse>;

  static FockOperator diagonal(std::vector<cplx> values) {
    const std::size_t d = values.size();
    return FockOperator(d, Diagonal{std::move(values)});
  }
  static FockOperator identity(std::size_t dim) { return diagonal(std::vector<cplx>(check_dim(dim), 1.0)); }
  static FockOperator zero(std::size_t dim) { return diagonal(std::vector<cplx>(check_dim(dim), 0.0)); }
  static FockOperator up_shift(std::size_t dim) { return FockOperator(check_dim(dim), UpShift{}); }
  static FockOperator down_shift(std::size_t dim) { return FockOperator(check_dim(dim), DownShift{}); }

  /// Builds a sparse operator; duplicate (row, col) entries are summed.
  static FockOperator sparse(std::size_t dim, std::vector<SparseEntry> entries) {
    check_dim(dim);
    std::map<std::pair<std::size_t, std::size_t>, cplx> acc;
    for (const auto& e : entries) {
      if (e.row >= dim || e.col >= dim) throw std::out_of_range("FockOperator::sparse: index outside [0, dim)");
      acc[{e.row, e.col}] += e.value;
    }
    return FockOperator(dim, from_map(acc));
  }

  std::size_t dim() const { return dim_; }
  const Repr& repr() const { return repr_; }
  ReprKind kind() const { return static_cast<ReprKind>(repr_.index()); }
  bool is_diagonal() const { return std::holds_alternative<Diagonal>(repr_); }

  const std::vector<cplx>& diagonal_values() const {
    if (const auto* d = std::get_if<Diagonal>(&repr_)) return d->values;
    throw std::logic_error("FockOperator: not a diagonal representation");
  }

  cplx at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw std::out_of_range("FockOperator::at");
    return std::visit(
        [&](const auto& r) -> cplx {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Diagonal>) {
            return row == col ? r.values[row] : cplx{};
          } else if constexpr (std::is_same_v<R, UpShift>) {
            return row == col + 1 ? cplx{1.0} : cplx{};
          } else if constexpr (std::is_same_v<R, DownShift>) {
            return col == row + 1 ? cplx{1.0} : cplx{};
          } else {
            auto it = std::lower_bound(r.entries.begin(), r.entries.end(), std::pair{row, col},
                                       [](const SparseEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                                         return std::pair{e.row, e.col} < k;
                                       });
            return (it != r.entries.end() && it->row == row && it->col == col) ? it->value : cplx{};
          }
        },
        repr_);
  }

  /// Nonzero entries in (row, col) order.
  std::vector<SparseEntry> triplets() const {
    std::vector<SparseEntry> out;
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Diagonal>) {
            for (std::size_t i = 0; i < dim_; ++i)
              if (r.values[i] != cplx{}) out.push_back({i, i, r.values[i]});
          } else if constexpr (std::is_same_v<R, UpShift>) {
            for (std::size_t i = 0; i + 1 < dim_; ++i) out.push_back({i + 1, i, 1.0});
          } else if constexpr (std::is_same_v<R, DownShift>) {
            for (std::size_t i = 0; i + 1 < dim_; ++i) out.push_back({i, i + 1, 1.0});
          } else {
            out = r.entries;
          }
        },
        repr_);
    return out;
  }

  double max_abs_entry() const {
    double m = 0.0;
    for (const auto& e : triplets()) m = std::max(m, std::abs(e.value));
    return m;
  }

 private:
  FockOperator(std::size_t dim, Repr r) : dim_(check_dim(dim)), repr_(std::move(r)) {}

  static std::size_t check_dim(std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("FockOperator: dimension must be >= 1");
    return dim;
  }

  static Sparse from_map(const std::map<std::pair<std::size_t, std::size_t>, cplx>& acc) {
    Sparse s;
    s.entries.reserve(acc.size());
    for (const auto& [k, v] : acc)
      if (v != cplx{}) s.entries.push_back({k.first, k.second, v});
    return s;
  }

  friend FockOperator operator*(const FockOperator&, const FockOperator&);
  friend FockOperator operator+(const FockOperator&, const FockOperator&);

  std::size_t dim_;
  Repr repr_;
};

inline void require_same_dim(const FockOperator& a, const FockOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

inline FockOperator operator*(cplx s, const FockOperator& a) {
  if (a.is_diagonal()) {
    auto v = a.diagonal_values();
    for (auto& x : v) x *= s;
    return FockOperator::diagonal(std::move(v));
  }
  auto t = a.triplets();
  for (auto& e : t) e.value *= s;
  return FockOperator::sparse(a.dim(), std::move(t));
}

inline FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b);
  if (a.is_diagonal() && b.is_diagonal()) {
    auto v = a.diagonal_values();
    const auto& w = b.diagonal_values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    return FockOperator::diagonal(std::move(v));
  }
  auto t = a.triplets();
  auto u = b.triplets();
  t.insert(t.end(), u.begin(), u.end());
  return FockOperator::sparse(a.dim(), std::move(t));
}

inline FockOperator operator-(const FockOperator& a, const FockOperator& b) { return a + (-1.0 * b); }

inline FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  if (a.is_diagonal() && b.is_diagonal()) {
    auto v = a.diagonal_values();
    const auto& w = b.diagonal_values();
    for (std::size_t i = 0; i < d; ++i) v[i] *= w[i];
    return FockOperator::diagonal(std::move(v));
  }
  // General sparse product: index the right factor by row.
  std::vector<std::vector<std::pair<std::size_t, cplx>>> rows(d);
  for (const auto& e : b.triplets()) rows[e.row].push_back({e.col, e.value});
  std::map<std::pair<std::size_t, std::size_t>, cplx> acc;
  for (const auto& e : a.triplets())
    for (const auto& [col, v] : rows[e.col]) acc[{e.row, col}] += e.value * v;
  return FockOperator(d, FockOperator::from_map(acc));
}

inline FockOperator adjoint(const FockOperator& a) {
  return std::visit(
      [&](const auto& r) -> FockOperator {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Diagonal>) {
          auto v = r.values;
          for (auto& x : v) x = std::conj(x);
          return FockOperator::diagonal(std::move(v));
        } else if constexpr (std::is_same_v<R, UpShift>) {
          return FockOperator::down_shift(a.dim());
        } else if constexpr (std::is_same_v<R, DownShift>) {
          return FockOperator::up_shift(a.dim());
        } else {
          std::vector<SparseEntry> t;
          for (const auto& e : r.entries) t.push_back({e.col, e.row, std::conj(e.value)});
          return FockOperator::sparse(a.dim(), std::move(t));
        }
      },
      a.repr());
}

inline std::vector<cplx> apply(const FockOperator& a, std::span<const cplx> v) {
  if (v.size() != a.dim()) throw DimensionMismatch(a.dim(), v.size());
  std::vector<cplx> out(a.dim());
  if (a.is_diagonal()) {
    const auto& d = a.diagonal_values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = d[i] * v[i];
    return out;
  }
  for (const auto& e : a.triplets()) out[e.row] += e.value * v[e.col];
  return out;
}

inline FockOperator power(const FockOperator& a, unsigned k) {
  FockOperator r = FockOperator::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Largest entrywise |a - b|; 0 means exactly equal.
inline double max_deviation(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b);
  if (a.is_diagonal() && b.is_diagonal()) {
    double m = 0.0;
    const auto& x = a.diagonal_values();
    const auto& y = b.diagonal_values();
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
  }
  std::map<std::pair<std::size_t, std::size_t>, cplx> acc;
  for (const auto& e : a.triplets()) acc[{e.row, e.col}] += e.value;
  for (const auto& e : b.triplets()) acc[{e.row, e.col}] -= e.value;
  double m = 0.0;
  for (const auto& [k, v] : acc) m = std::max(m, std::abs(v));
  return m;
}

inline bool exactly_equal(const FockOperator& a, const FockOperator& b) { return max_deviation(a, b) == 0.0; }

}  // namespace fockarith
