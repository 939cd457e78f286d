#ifndef SUPERMAGIC_COMPOSITION_HPP
#define SUPERMAGIC_COMPOSITION_HPP

// Split Hurwitz (super)algebras, their para-Hurwitz counterparts, and the
// composition axiom checkers.
//
// Basis orders:
//   S1  [1]                      S2  [1, u]        (1 = (1,1), u = (1,-1))
//   S4  [E11, E12, E21, E22]     S8  S4 basis then l·S4 basis (Cayley-Dickson)
//   S12 [1, u, v]                S42 [E11, E12, E21, E22, u, v]

#include "supermagic/report.hpp"
#include "supermagic/superalgebra.hpp"

#include <string>

namespace supermagic {

enum class CompositionKind { S1, S2, S4, S8, S12, S42 };

std::string to_string(CompositionKind k);
CompositionKind composition_kind_from_name(const std::string& name);
bool is_super(CompositionKind k);
inline constexpr CompositionKind kAllCompositionKinds[] = {
    CompositionKind::S1, CompositionKind::S2,  CompositionKind::S4,
    CompositionKind::S8, CompositionKind::S12, CompositionKind::S42};

/// Unital composition superalgebra. The algebra carries the polar form b of
/// the norm; the even norm is q(x) = b(x,x)/2.
struct HurwitzSuperalgebra {
  SuperAlgebra algebra;
  Vector unit;

  /// Validates the unit and regularity of the form (std::invalid_argument).
  HurwitzSuperalgebra(SuperAlgebra a, Vector unit);

  const Matrix& form() const { return *algebra.form(); }
  Index dim() const { return algebra.dim(); }
  Scalar norm(const Vector& x) const { return algebra.bilinear(x, x) * gf::half(); }
};

/// Symmetric composition superalgebra: the algebra's product is x∙y and its
/// form is associative.
struct SymmetricComposition {
  SuperAlgebra algebra;
  Index dim() const { return algebra.dim(); }
  Scalar b(Index i, Index j) const { return (*algebra.form())(i, j); }
};

/// Two-dimensional space V with <u|v> = 1, and its symplectic involution on
/// End(V): <f(x)|y> = <x|f̄(y)>.
struct SymplecticPlane {
  Matrix gram;  // <x|y> = x^T gram y on the basis {u, v}
  SymplecticPlane();
  Scalar pair(const Vector& x, const Vector& y) const { return (x.transpose() * gram * y)(0, 0); }
  Matrix involution(const Matrix& f) const;
};

/// Split Hurwitz (super)algebra of the given kind (S12 -> B(1,2), S42 -> B(4,2)).
/// Throws std::invalid_argument for the superalgebras unless p = 3.
HurwitzSuperalgebra make_hurwitz(CompositionKind k);

/// x̄ = b(x,1)1 - x.
Vector standard_involution(const HurwitzSuperalgebra& c, const Vector& x);
Matrix standard_involution_matrix(const HurwitzSuperalgebra& c);

/// Same space and form, product x∙y = x̄ȳ.
SymmetricComposition para_hurwitz(const HurwitzSuperalgebra& c, const std::string& name = "");

/// Para-Hurwitz superalgebra of the given kind (S1 ... S42).
SymmetricComposition make_symmetric(CompositionKind k);

/// Algebra with the opposite product y x (for ordinary algebras).
HurwitzSuperalgebra opposite(const HurwitzSuperalgebra& c, const std::string& name);

/// Composition identities on basis quadruples (plus the even-part norm
/// identities). Throws std::invalid_argument if the form is degenerate.
Report check_composition(const SuperAlgebra& c);
/// check_composition plus two-sided unit.
Report check_hurwitz(const HurwitzSuperalgebra& c);
/// check_composition plus b(x∙y, z) = b(x, y∙z).
Report check_symmetric(const SymmetricComposition& s);

}  // namespace supermagic

#endif  // SUPERMAGIC_COMPOSITION_HPP
