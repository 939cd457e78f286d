#ifndef SUPERMAGIC_TRIALITY_HPP
#define SUPERMAGIC_TRIALITY_HPP

// Orthosymplectic superalgebras, triality superalgebras tri(S), the cyclic
// automorphism θ and the elements σ_{x,y}, t_{x,y}.

#include "supermagic/composition.hpp"

#include <array>

namespace supermagic {

/// Triple (d0, d1, d2) of operators on S with a common parity.
struct TrialityElement {
  std::array<Matrix, 3> d;
  int parity = 0;

  static TrialityElement zero(Index n, int parity = 0);
  TrialityElement operator+(const TrialityElement& o) const;
  TrialityElement operator-(const TrialityElement& o) const;
  friend TrialityElement operator*(Scalar c, const TrialityElement& t);
  bool operator==(const TrialityElement& o) const;
  bool is_zero() const;
};

/// Block-diagonal operator on S ⊕ S ⊕ S, flattened; the ambient coordinates
/// of tri(S).
Vector flatten_triple(const TrialityElement& t);
TrialityElement unflatten_triple(const Vector& v, Index n, int parity);
/// S ⊕ S ⊕ S as a superspace.
SuperSpace triple_space(const SuperSpace& s);

struct TrialityAlgebra {
  SymmetricComposition S;
  GradedSpan span;          // canonical basis, in flatten_triple coordinates
  SuperAlgebra as_lie;      // componentwise graded bracket

  Index dim() const { return span.dim(); }
  GradedDim graded_dim() const { return span.graded_dim(); }
  TrialityElement element(Index k) const;
  /// Coordinates in the canonical basis; std::logic_error if t is not in tri(S).
  Vector coordinates(const TrialityElement& t) const;
};

/// Homogeneous d with b(d x, y) + (-1)^{|d||x|} b(x, d y) = 0, as flattened operators.
GradedSpan osp_basis(const SuperSpace& space, const Matrix& gram);

/// Does d lie in osp(S, b)?
bool in_osp(const SymmetricComposition& s, const Matrix& d, int parity);

/// d0(x∙y) = d1(x)∙y + (-1)^{|d||x|} x∙d2(y) on basis pairs, and each d_i in osp.
bool in_tri(const SymmetricComposition& s, const TrialityElement& t);

TrialityAlgebra tri_basis(const SymmetricComposition& s);

/// θ(d0, d1, d2) = (d2, d0, d1).
TrialityElement theta(const TrialityElement& t, int times = 1);

/// σ_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x for homogeneous x, y.
Matrix sigma_xy(const SymmetricComposition& s, const Vector& x, int px, const Vector& y, int py);

/// t_{x,y} = (σ_{x,y}, ½b(x,y)1 - r_x l_y, ½b(x,y)1 - l_x r_y), with l_x(y) = x∙y and
/// r_x(y) = (-1)^{|x||y|} y∙x.
TrialityElement t_xy(const SymmetricComposition& s, const Vector& x, int px, const Vector& y, int py);
TrialityElement t_basis(const SymmetricComposition& s, Index i, Index j);

/// Span of θ^i(t_{x,y}) over basis pairs and i = 0, 1, 2 (flatten_triple coordinates).
GradedSpan t_span(const SymmetricComposition& s);

/// Q̄ for a quaternion algebra Q: product x∙y = conj(xy), i.e. the
/// para-Hurwitz algebra of the opposite algebra.
SymmetricComposition para_quaternion(const HurwitzSuperalgebra& q);

/// Element of ker π_r of tri(Q̄) attached to a traceless a:
/// r = 0: (0, -R_a, L_a), r = 1: (L_a, 0, -R_a), r = 2: (-R_a, L_a, 0),
/// where L, R are multiplications in Q.
TrialityElement quaternion_kernel_element(const HurwitzSuperalgebra& q, int r, const Vector& a);

struct QuaternionTriDecomposition {
  SymmetricComposition qbar;
  TrialityAlgebra tri;
  std::array<Subspace, 3> kernels;  // in flatten_triple coordinates
  Report report;                    // each kernel in tri, dims, directness, sum = tri
};

/// tri(Q̄) = ker π0 ⊕ ker π1 ⊕ ker π2 with the closed forms above.
QuaternionTriDecomposition quaternion_tri_decomposition(const HurwitzSuperalgebra& q);

}  // namespace supermagic

#endif  // SUPERMAGIC_TRIALITY_HPP
