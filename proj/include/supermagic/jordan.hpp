#ifndef SUPERMAGIC_JORDAN_HPP
#define SUPERMAGIC_JORDAN_HPP

// Jordan superalgebras H3(C), K3, K9 and the derivation / structure algebras.
//
// H3(C) basis: e0, e1, e2, then ι0(S), ι1(S), ι2(S) in the basis order of C.
// K3 basis: e, x, y.  K9 = K3 ⊗ K3 with basis index 3*a + b.

#include "supermagic/toolbox.hpp"
#include "supermagic/triality.hpp"

#include <array>

namespace supermagic {

struct H3Algebra {
  HurwitzSuperalgebra C;
  SymmetricComposition S;  // para-Hurwitz of C; supplies a∙b and b(a,b)
  SuperAlgebra J;

  Index n() const { return C.dim(); }
  Index e(int i) const { return i; }
  Index iota(int i, Index a) const { return 3 + i * n() + a; }
  /// ι_i(a) as a vector of J.
  Vector iota_vec(int i, const Vector& a) const;
  Vector unit() const;
};

H3Algebra make_H3(const HurwitzSuperalgebra& c, const std::string& name = "");
H3Algebra make_H3(CompositionKind k);

/// e² = e, ex = xe = ½x, ey = ye = ½y, xy = e = -yx, x² = y² = 0, with the
/// S12 form b(e,e) = 2, b(x,y) = 1.
SuperAlgebra make_K3();
/// K3 ⊗ K3 (graded tensor product).
SuperAlgebra make_K9();

/// der(A), memoized per (name, p, table size).
const GradedSpan& derivations_cached(const SuperAlgebra& a);

/// D(e_i) = 0, D(ι_i(a)) = ι_i(d_i a).
Matrix D_from_tri(const H3Algebra& h, const TrialityElement& t);
/// 2[L_{ι_i(a)}, L_{e_{i+1}}] for homogeneous a of parity pa.
Matrix D_i(const H3Algebra& h, int i, const Vector& a, int pa);
/// The closed-form action of D_i(a) on the basis of J.
Matrix D_i_closed_form(const H3Algebra& h, int i, const Vector& a, int pa);

struct DerJGrading {
  GradedSpan der;
  GradedSpan tri_part;
  std::array<GradedSpan, 3> d_parts;
  Report report;  // subspace equalities and directness
};

/// der J computed by the solver and compared with D_{tri(S)} ⊕ D_0(S) ⊕ D_1(S) ⊕ D_2(S).
DerJGrading derJ_grading(const H3Algebra& h);

/// Operator identities around D_i(a): closed form, [L_{ι_i(a)}, L_{e_i}] = 0,
/// 2[L_{ι_i(a)}, L_{e_{i+1}}] = -2[L_{ι_i(a)}, L_{e_{i+2}}], on every basis a.
Report check_D_identities(const H3Algebra& h);

struct StructurePair {
  GradedSpan der;          // flattened operators on J
  GradedSpan str_ops;      // der J ⊕ L_J
  SuperAlgebra str;
  Vector identity_coords;  // coordinates of L_1 = I in str (unital J only)
  Subspace center_line;    // span{L_1} in str coordinates
  std::optional<Quotient> pstr;
};

/// str J = der J ⊕ L_J (closure asserted), pstr J = str J / k L_1 when a unit is given.
StructurePair make_str_pstr(const SuperAlgebra& j, const std::optional<Vector>& unit = std::nullopt);

/// der J as a Lie superalgebra on its canonical basis.
SuperAlgebra der_lie(const SuperAlgebra& j);

}  // namespace supermagic

#endif  // SUPERMAGIC_JORDAN_HPP
