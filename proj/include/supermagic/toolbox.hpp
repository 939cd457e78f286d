#ifndef SUPERMAGIC_TOOLBOX_HPP
#define SUPERMAGIC_TOOLBOX_HPP

// Generic algebra toolbox over structure-constant superalgebras: identity
// checkers, substructures, quotients, tensor products, derivation solvers,
// homomorphism verification and simplicity testing.

#include "supermagic/report.hpp"
#include "supermagic/superalgebra.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace supermagic {

/// Threads used by the partitioned checks (SUPERMAGIC_WORKERS, default: all cores).
unsigned worker_count();

struct JacobiOptions {
  enum class Mode { automatic, exhaustive, sampled };
  Mode mode = Mode::automatic;
  Index exhaustive_limit = 140;        // automatic: exhaustive up to this dimension
  std::uint64_t samples = 1'000'000;   // sampled mode: random basis triples
  std::uint64_t seed = 0;
};

/// Graded Jacobi identity on basis triples, plus super-anticommutativity on
/// basis pairs. Violations become witnesses.
Report check_super_jacobi(const SuperAlgebra& a, const JacobiOptions& opt = {});

/// Supercommutativity and the linearized operator Jordan identity
/// (-1)^{xz}[L_{xy},L_z] + (-1)^{yx}[L_{yz},L_x] + (-1)^{zy}[L_{zx},L_y] = 0.
Report check_jordan_super(const SuperAlgebra& a);

/// Operator y -> x*y.
GradedLinearMap left_mult_operator(const SuperAlgebra& a, const Vector& x);

Subspace derived_subalgebra(const SuperAlgebra& a);
/// {z : z*x = x*z = 0 for all x}.
Subspace center(const SuperAlgebra& a);
/// Smallest two-sided ideal containing `seed`.
Subspace ideal_closure(const SuperAlgebra& a, const Subspace& seed);
bool is_ideal(const SuperAlgebra& a, const Subspace& s);

struct Quotient {
  SuperAlgebra algebra;
  Matrix projection;              // dim(A/I) x dim(A)
  std::vector<Index> complement;  // basis vectors of A representing A/I
};

/// A/I on the complement spanned by the non-pivot coordinates of I.
/// Throws std::invalid_argument if I is not a homogeneous ideal.
Quotient quotient(const SuperAlgebra& a, const Subspace& ideal);

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

/// Basis (a_i, b_j) in lexicographic order, (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd.
/// The form, if both factors carry one, is the graded tensor form.
SuperAlgebra graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b);

/// Operator tensor (f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y) on a graded tensor space.
Matrix operator_tensor(const Matrix& f, const Matrix& g, int g_parity, const SuperSpace& first,
                       const SuperSpace& second);

/// der(A) = {d : d(xy) = d(x)y + (-1)^{|d||x|} x d(y)}, each parity solved separately.
/// Vectors are flattened (row-major) operator matrices.
GradedSpan derivations(const SuperAlgebra& a);

/// Does the operator satisfy the derivation rule on all basis pairs?
bool is_derivation(const SuperAlgebra& a, const Matrix& d, int parity);

/// span{[L_x, L_y]} over basis pairs.
GradedSpan inner_derivations(const SuperAlgebra& j);

struct HomReport {
  Report report;
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// Checks f(xy) - f(x)f(y) ∈ mod on all basis pairs, parity preservation,
/// and injectivity/surjectivity (the latter modulo `mod` on the codomain).
HomReport hom_check(const GradedLinearMap& f, const SuperAlgebra& a, const SuperAlgebra& b,
                    const std::optional<Subspace>& mod = std::nullopt, const std::string& name = "hom");

struct SimplicityOptions {
  std::uint64_t seed = 0;
  int attempts = 64;
};

struct SimplicityVerdict {
  Status status = Status::inconclusive;  // pass = simple, fail = not simple
  std::optional<Subspace> witness;       // proper ideal when not simple
  std::string reason;
  bool simple() const { return status == Status::pass; }
};

/// Irreducibility of A as a module over its multiplication operators together
/// with the parity involution (so submodules are graded ideals).
SimplicityVerdict is_simple(const SuperAlgebra& a, const SimplicityOptions& opt = {});

/// Meataxe on an explicit generator set acting on S^n: either a proper
/// invariant subspace, a Norton irreducibility certificate, or inconclusive.
SimplicityVerdict meataxe(const std::vector<Matrix>& generators, Index n, const SimplicityOptions& opt = {});

}  // namespace supermagic

#endif  // SUPERMAGIC_TOOLBOX_HPP
