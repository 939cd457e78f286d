#ifndef SUPERMAGIC_LINALG_HPP
#define SUPERMAGIC_LINALG_HPP

// Exact linear algebra over a field scalar (GF(p) in practice): reduced
// row-echelon forms, kernels, linear solves and a canonical subspace type.
// Everything here is templated on the scalar; the only requirements are
// field operations, equality, and construction from an integer.

#include "supermagic/field.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace supermagic {

using Index = Eigen::Index;

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

namespace detail {

// dst[k] -= f * src[k] for k in [0, n)
template <class S>
inline void axpy_sub(S* dst, const S* src, S f, Index n) {
  for (Index k = 0; k < n; ++k) dst[k] -= f * src[k];
}

inline void axpy_sub(gf::Fp* dst, const gf::Fp* src, gf::Fp f, Index n) {
  const std::uint64_t p = gf::modulus();
  const std::uint64_t g = p - f.value();  // -f
  for (Index k = 0; k < n; ++k) {
    const std::uint32_t s = src[k].value();
    if (s == 0) continue;
    dst[k] = gf::Fp::raw(static_cast<std::uint32_t>((dst[k].value() + g * s) % p));
  }
}

template <class S>
inline bool is_zero(const S& s) {
  return s == S(0);
}

}  // namespace detail

/// Exact zero test (Eigen's isZero is a fuzzy comparison).
template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!detail::is_zero(m(i, j))) return false;
  return true;
}

/// Reduced row-echelon form with its pivot columns.
template <class S>
struct Echelon {
  MatrixX<S> reduced;          // rank() nonzero rows on top, zero rows below
  std::vector<Index> pivots;   // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Idempotent: rref(rref(m).reduced) == rref(m).
template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Echelon<S> e;
  e.reduced = m;
  MatrixX<S>& r = e.reduced;
  const Index rows = r.rows(), cols = r.cols();
  Index row = 0;
  for (Index c = 0; c < cols && row < rows; ++c) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (!detail::is_zero(r(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) r.row(piv).swap(r.row(row));
    const S inv = S(1) / r(row, c);
    for (Index k = c; k < cols; ++k) r(row, k) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == row || detail::is_zero(r(i, c))) continue;
      detail::axpy_sub(&r(i, c), &r(row, c), r(i, c), cols - c);
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// A linear subspace of S^n, stored as its reduced row-echelon basis. Two
/// subspaces are equal iff their bases are identical.
template <class S>
class BasicSubspace {
 public:
  BasicSubspace() = default;
  explicit BasicSubspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Row span of `rows`.
  template <class Derived>
  static BasicSubspace span(const Eigen::MatrixBase<Derived>& rows) {
    BasicSubspace s(rows.cols());
    if (rows.rows() == 0) return s;
    auto e = rref(rows);
    s.basis_ = e.reduced.topRows(e.rank());
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static BasicSubspace span(const std::vector<VectorX<S>>& vectors, Index ambient) {
    MatrixX<S> m(static_cast<Index>(vectors.size()), ambient);
    for (Index i = 0; i < m.rows(); ++i) m.row(i) = vectors[i].transpose();
    return span(m);
  }

  static BasicSubspace full(Index n) {
    BasicSubspace s(n);
    s.basis_ = MatrixX<S>::Identity(n, n);
    for (Index i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(pivots_.size()); }
  bool is_zero() const { return pivots_.empty(); }
  const MatrixX<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorX<S> vector(Index k) const { return basis_.row(k).transpose(); }

  /// Coefficients of `v` against the basis rows; empty if v is not in the span.
  template <class Derived>
  std::optional<VectorX<S>> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    check_ambient(v.size());
    VectorX<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[k]);
    VectorX<S> back = basis_.transpose() * c;
    for (Index i = 0; i < ambient_; ++i)
      if (back(i) != v(i)) return std::nullopt;
    return c;
  }

  /// v minus its component along the basis: zero at every pivot column.
  template <class Derived>
  VectorX<S> reduce(const Eigen::MatrixBase<Derived>& v) const {
    check_ambient(v.size());
    VectorX<S> r = v;
    for (Index k = 0; k < dim(); ++k) {
      const S f = r(pivots_[k]);
      if (detail::is_zero(f)) continue;
      detail::axpy_sub(r.data(), basis_.row(k).data(), f, ambient_);
    }
    return r;
  }

  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    VectorX<S> r = reduce(v);
    for (Index i = 0; i < ambient_; ++i)
      if (!detail::is_zero(r(i))) return false;
    return true;
  }

  bool contains(const BasicSubspace& other) const {
    check_ambient(other.ambient());
    for (Index k = 0; k < other.dim(); ++k)
      if (!contains(other.basis_.row(k).transpose())) return false;
    return true;
  }

  /// Columns that are not pivots; indexes a canonical complement.
  std::vector<Index> non_pivots() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index i = 0; i < ambient_; ++i) {
      if (k < pivots_.size() && pivots_[k] == i) {
        ++k;
        continue;
      }
      out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
      for (Index j = 0; j < a.ambient_; ++j)
        if (a.basis_(i, j) != b.basis_(i, j)) return false;
    return true;
  }
  friend bool operator!=(const BasicSubspace& a, const BasicSubspace& b) { return !(a == b); }

  void check_ambient(Index n) const {
    if (n != ambient_)
      throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(n) +
                                  " vs " + std::to_string(ambient_));
  }

 private:
  Index ambient_ = 0;
  MatrixX<S> basis_;
  std::vector<Index> pivots_;
};

/// {v : m v = 0}, as a canonical subspace of S^cols.
template <class Derived>
BasicSubspace<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Index cols = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<S> k(cols - e.rank(), cols);
  k.setZero();
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(row, f) = S(1);
    for (Index i = 0; i < e.rank(); ++i) k(row, e.pivots[i]) = -e.reduced(i, f);
    ++row;
  }
  return BasicSubspace<S>::span(k);
}

/// Some x with a x = b, or nothing if the system is inconsistent.
template <class DA, class DB>
std::optional<VectorX<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                                  const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  MatrixX<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = rref(aug);
  if (e.rank() > 0 && e.pivots.back() == a.cols()) return std::nullopt;
  VectorX<S> x = VectorX<S>::Zero(a.cols());
  for (Index i = 0; i < e.rank(); ++i) x(e.pivots[i]) = e.reduced(i, a.cols());
  return x;
}

template <class S>
BasicSubspace<S> sum(const BasicSubspace<S>& u, const BasicSubspace<S>& v) {
  u.check_ambient(v.ambient());
  MatrixX<S> m(u.dim() + v.dim(), u.ambient());
  m << u.basis(), v.basis();
  return BasicSubspace<S>::span(m);
}

/// U ∩ V via the kernel of [U^T | V^T].
template <class S>
BasicSubspace<S> intersect(const BasicSubspace<S>& u, const BasicSubspace<S>& v) {
  u.check_ambient(v.ambient());
  const Index n = u.ambient();
  if (u.dim() == 0 || v.dim() == 0) return BasicSubspace<S>(n);
  MatrixX<S> stacked(n, u.dim() + v.dim());
  stacked << u.basis().transpose(), v.basis().transpose();
  BasicSubspace<S> k = kernel_basis(stacked);
  MatrixX<S> vecs = k.basis().leftCols(u.dim()) * u.basis();
  return BasicSubspace<S>::span(vecs);
}

template <class S>
bool equal(const BasicSubspace<S>& u, const BasicSubspace<S>& v) {
  return u == v;
}

/// One row of a sparse linear system.
template <class S>
using SparseRow = std::vector<std::pair<Index, S>>;

/// Kernel of a tall sparse system. Large systems are compressed by a random
/// left multiplier R; ker(A) ⊆ ker(RA) always, and the candidate basis is
/// accepted only after A·K = 0 is checked exactly, which forces equality.
template <class S>
BasicSubspace<S> sparse_kernel(const std::vector<SparseRow<S>>& rows, Index cols,
                          std::uint64_t seed = 0x5eed) {
  const Index m = static_cast<Index>(rows.size());
  if (cols == 0) return BasicSubspace<S>(0);
  auto dense = [&]() {
    MatrixX<S> a = MatrixX<S>::Zero(std::max<Index>(m, 1), cols);
    for (Index i = 0; i < m; ++i)
      for (const auto& [c, v] : rows[static_cast<std::size_t>(i)]) a(i, c) += v;
    return kernel_basis(a);
  };
  if (m <= 2 * cols + 64 || m * cols <= 4'000'000) return dense();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coef(0, (1LL << 31) - 1);
  for (Index extra = 24; extra <= cols; extra *= 2) {
    const Index k = std::min<Index>(m, cols + extra);
    MatrixX<S> ra = MatrixX<S>::Zero(k, cols);
    for (Index i = 0; i < m; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (row.empty()) continue;
      for (Index r = 0; r < k; ++r) {
        const S w = S(coef(rng));
        if (detail::is_zero(w)) continue;
        for (const auto& [c, v] : row) ra(r, c) += w * v;
      }
    }
    BasicSubspace<S> cand = kernel_basis(ra);
    bool ok = true;
    for (Index i = 0; i < m && ok; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      for (Index b = 0; b < cand.dim() && ok; ++b) {
        S acc(0);
        for (const auto& [c, v] : row) acc += v * cand.basis()(b, c);
        ok = detail::is_zero(acc);
      }
    }
    if (ok) return cand;
  }
  return dense();
}

}  // namespace supermagic

#endif  // SUPERMAGIC_LINALG_HPP
