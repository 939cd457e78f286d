#ifndef SUPERMAGIC_SUPERALGEBRA_HPP
#define SUPERMAGIC_SUPERALGEBRA_HPP

#include "supermagic/field.hpp"
#include "supermagic/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace supermagic {

using Scalar = gf::Fp;
using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;
using Subspace = BasicSubspace<Scalar>;

/// (even|odd) dimension pair.
struct GradedDim {
  Index even = 0;
  Index odd = 0;
  Index total() const { return even + odd; }
  friend bool operator==(const GradedDim&, const GradedDim&) = default;
  friend GradedDim operator+(GradedDim a, GradedDim b) { return {a.even + b.even, a.odd + b.odd}; }
  friend GradedDim operator*(Index k, GradedDim a) { return {k * a.even, k * a.odd}; }
};

std::string to_string(const GradedDim& d);

/// Finite basis with a parity bit per vector.
struct SuperSpace {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> parity;

  Index dim() const { return static_cast<Index>(labels.size()); }
  GradedDim graded_dim() const;
  int parity_of(Index i) const { return parity[static_cast<std::size_t>(i)]; }
  /// Throws if labels repeat or the two lists disagree in length.
  void validate() const;
};

/// Parity of entry (row, col) of an operator matrix on a superspace.
inline int entry_parity(const SuperSpace& codomain, Index row, const SuperSpace& domain, Index col) {
  return (codomain.parity_of(row) + domain.parity_of(col)) & 1;
}

struct Term {
  Index index;
  Scalar coeff;
};
using SparseVec = std::vector<Term>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& s, Index n);

enum class Kind { lie, jordan, composition, plain };
std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

/// Superalgebra given by structure constants: b_i * b_j = sum_k c_ij^k b_k.
/// Construction enforces parity homogeneity and (when a form is present) an
/// even supersymmetric Gram matrix. Kind-specific identities are the job of
/// the checkers, so that deliberately broken tables can be examined.
class SuperAlgebra {
 public:
  using ProductFn = std::function<Vector(Index, Index)>;

  SuperAlgebra() = default;
  SuperAlgebra(std::string name, SuperSpace space, Kind kind, std::vector<SparseVec> table,
               std::optional<Matrix> form = std::nullopt);

  static SuperAlgebra from_products(std::string name, SuperSpace space, Kind kind,
                                    const ProductFn& product,
                                    std::optional<Matrix> form = std::nullopt);

  const std::string& name() const { return name_; }
  const SuperSpace& space() const { return space_; }
  Kind kind() const { return kind_; }
  Index dim() const { return space_.dim(); }
  int parity(Index i) const { return space_.parity_of(i); }
  GradedDim graded_dim() const { return space_.graded_dim(); }
  const std::optional<Matrix>& form() const { return form_; }

  const SparseVec& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  Vector basis_product(Index i, Index j) const { return to_dense(product(i, j), dim()); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector unit_vector(Index i) const;

  /// Matrix of y -> x*y (column j is x*b_j).
  Matrix left_mult(const Vector& x) const;
  /// Matrix of y -> y*x.
  Matrix right_mult(const Vector& x) const;
  Matrix left_mult_basis(Index i) const;
  Matrix right_mult_basis(Index i) const;

  /// b(x, y) from the Gram matrix; throws if the algebra carries no form.
  Scalar bilinear(const Vector& x, const Vector& y) const;

  std::size_t nonzeros() const;
  SuperAlgebra renamed(std::string name) const;
  SuperAlgebra with_kind(Kind kind) const;
  /// Copy with c_ij^k replaced by `c` (zero removes the entry).
  SuperAlgebra with_entry(Index i, Index j, Index k, Scalar c) const;

  friend bool structurally_equal(const SuperAlgebra& a, const SuperAlgebra& b);

 private:
  std::string name_;
  SuperSpace space_;
  Kind kind_ = Kind::plain;
  std::vector<SparseVec> table_;
  std::optional<Matrix> form_;
};

/// Even linear map between superspaces; all named isomorphisms are of this kind.
struct GradedLinearMap {
  SuperSpace domain;
  SuperSpace codomain;
  Matrix matrix;  // column i = image of domain basis vector i
  int parity = 0;
};

/// Parity of a homogeneous operator between superspaces, or nothing if mixed.
/// The zero operator reports parity 0.
std::optional<int> operator_parity(const Matrix& m, const SuperSpace& domain,
                                   const SuperSpace& codomain);

/// Graded commutator a b - (-1)^{|a||b|} b a.
Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb);

Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, Index rows, Index cols);

/// A homogeneous spanning set reduced to a canonical graded basis: the even
/// and odd parts are each in reduced echelon form, even vectors first. The
/// ambient coordinates carry parities so that the two parts have disjoint
/// supports and coordinates can be read off at pivot columns.
class GradedSpan {
 public:
  GradedSpan() = default;
  GradedSpan(std::vector<std::uint8_t> ambient_parity, Subspace even, Subspace odd);

  /// Span of homogeneous vectors; throws if a vector is not homogeneous.
  static GradedSpan of(const std::vector<Vector>& vectors, std::vector<std::uint8_t> ambient_parity);

  Index ambient() const { return static_cast<Index>(ambient_parity_.size()); }
  Index dim() const { return even_.dim() + odd_.dim(); }
  GradedDim graded_dim() const { return {even_.dim(), odd_.dim()}; }
  Vector vector(Index k) const;
  int parity(Index k) const { return k < even_.dim() ? 0 : 1; }
  const Subspace& even() const { return even_; }
  const Subspace& odd() const { return odd_; }
  const std::vector<std::uint8_t>& ambient_parity() const { return ambient_parity_; }

  std::optional<Vector> coordinates(const Vector& v) const;
  /// Coordinates or std::logic_error naming `what`.
  Vector coordinates_or_throw(const Vector& v, const std::string& what) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  /// Ungraded view (both parts together) for lattice operations.
  Subspace whole() const;

  friend bool operator==(const GradedSpan& a, const GradedSpan& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

 private:
  std::vector<std::uint8_t> ambient_parity_;
  Subspace even_;
  Subspace odd_;
};

/// Parities of the flattened entries of operators on `space`.
std::vector<std::uint8_t> operator_entry_parities(const SuperSpace& space);

/// Lie superalgebra structure on a space of operators closed under the
/// graded commutator. Throws std::logic_error if it is not closed.
SuperAlgebra operator_lie_algebra(const std::string& name, const GradedSpan& ops,
                                  const SuperSpace& space, const std::string& label_prefix);

/// Operator (as a matrix on `space`) of basis vector k of an operator span.
Matrix span_operator(const GradedSpan& ops, Index k, Index n);

}  // namespace supermagic

#endif  // SUPERMAGIC_SUPERALGEBRA_HPP
