#ifndef SUPERMAGIC_TKK_HPP
#define SUPERMAGIC_TKK_HPP

// The quaternion algebra on {1, e0, e1, e2}, the Tits construction
// T(Q,H) = (Q0 ⊗ H) ⊕ der H and the Tits-Kantor-Koecher superalgebra.
//
// T(Q,H) basis: e0⊗H, e1⊗H, e2⊗H (each in the basis order of H), then the
// canonical basis of der H.

#include "supermagic/composition.hpp"
#include "supermagic/report.hpp"

namespace supermagic {

/// e_i² = -1, e_i e_{i+1} = -e_{i+2} = -e_{i+1} e_i, q(1) = q(e_i) = 1, basis orthogonal.
struct QuaternionBasis {
  HurwitzSuperalgebra Q;
  /// Index of e_i in Q.
  Index e(int i) const { return 1 + i; }
  Vector e_vec(int i) const { return Q.algebra.unit_vector(e(i)); }
  Scalar b_q(const Vector& a, const Vector& b) const { return Q.algebra.bilinear(a, b); }
};

QuaternionBasis make_split_quaternion();

/// Associativity, composition axioms, [Q0, Q0] = Q0.
Report check_quaternion(const QuaternionBasis& q);

struct TitsAlgebra {
  QuaternionBasis Q;
  SuperAlgebra H;
  GradedSpan der;  // der H, flattened operators
  SuperAlgebra T;

  Index h_dim() const { return H.dim(); }
  /// Index of e_i ⊗ h_k.
  Index qh(int i, Index k) const { return i * H.dim() + k; }
  Index der_begin() const { return 3 * H.dim(); }
  /// Coordinates of an operator of der H inside T.
  Vector der_element(const Matrix& d) const;
};

/// [d, a⊗x] = a⊗d(x); [a⊗x, b⊗y] = [a,b]⊗xy - 2 b_q(a,b) d_{x,y}, d_{x,y} = [L_x, L_y];
/// der H with its own bracket.
TitsAlgebra make_tits(const QuaternionBasis& q, const SuperAlgebra& h);
/// make_tits with the split quaternion algebra.
TitsAlgebra tkk(const SuperAlgebra& j);

/// Closure checks: der H is a subalgebra and Q0 ⊗ H a der H-submodule.
Report check_tits_blocks(const TitsAlgebra& t);

}  // namespace supermagic

#endif  // SUPERMAGIC_TKK_HPP
