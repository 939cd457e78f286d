#include "doctest.h"
#include "supermagic/toolbox.hpp"

using namespace supermagic;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Scalar(x);
  return v;
}

// Hand-entered K3 table, basis [e, x, y].
SuperAlgebra k3_by_hand() {
  const Scalar h = gf::half();
  return SuperAlgebra::from_products("K3", SuperSpace{{"e", "x", "y"}, {0, 1, 1}}, Kind::jordan,
                                     [&](Index i, Index j) {
                                       Vector v = Vector::Zero(3);
                                       if (i == 0 && j == 0) v(0) = Scalar(1);
                                       else if (i == 0 || j == 0) v(i + j) = h;
                                       else if (i == 1 && j == 2) v(0) = Scalar(1);
                                       else if (i == 2 && j == 1) v(0) = Scalar(-1);
                                       return v;
                                     });
}

// sl2 with basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
SuperAlgebra sl2() {
  return SuperAlgebra::from_products("sl2", SuperSpace{{"h", "e", "f"}, {0, 0, 0}}, Kind::lie,
                                     [](Index i, Index j) {
                                       Vector v = Vector::Zero(3);
                                       auto set = [&](Index a, Index b, Index k, int c) {
                                         if (i == a && j == b) v(k) = Scalar(c);
                                         if (i == b && j == a) v(k) = Scalar(-c);
                                       };
                                       set(0, 1, 1, 2);
                                       set(0, 2, 2, -2);
                                       set(1, 2, 0, 1);
                                       return v;
                                     });
}

}  // namespace

TEST_CASE("K3 products") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  CHECK(k3.multiply(vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 2, 0}));
  CHECK(k3.multiply(vec({0, 0, 0}), vec({0, 1, 1})) == vec({0, 0, 0}));
  CHECK(k3.multiply(vec({0, 1, 0}), vec({0, 0, 1})) == vec({1, 0, 0}));
  CHECK(k3.multiply(vec({0, 0, 1}), vec({0, 1, 0})) == vec({-1, 0, 0}));
}

TEST_CASE("construction rejects a parity-inhomogeneous table") {
  gf::ModulusScope scope(3);
  CHECK_THROWS(SuperAlgebra::from_products("bad", SuperSpace{{"a", "b"}, {0, 1}}, Kind::plain,
                                           [](Index, Index) { return vec({1, 1}); }));
}

TEST_CASE("Jacobi: sl2 passes, abelian passes, perturbed entry fails") {
  gf::ModulusScope scope(3);
  CHECK(check_super_jacobi(sl2()).passed());
  auto ab = SuperAlgebra::from_products("ab", SuperSpace{{"a", "b", "c"}, {0, 1, 1}}, Kind::lie,
                                        [](Index, Index) { return Vector::Zero(3); });
  CHECK(check_super_jacobi(ab).passed());
  auto bad = sl2().with_entry(0, 1, 1, Scalar(1)).with_entry(1, 0, 1, Scalar(-1));
  auto r = check_super_jacobi(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("Jordan check: K3 passes, xy = 0 fails") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  CHECK(check_jordan_super(k3).passed());
  auto bad = k3.with_entry(1, 2, 0, Scalar(0));
  auto r = check_jordan_super(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witnesses.empty());
  // supercommutative, but e acts with two different eigenvalues on the odd part
  auto skew = k3.with_entry(0, 1, 1, Scalar(1)).with_entry(1, 0, 1, Scalar(1));
  CHECK_FALSE(check_jordan_super(skew).passed());
}

TEST_CASE("derivations of K3 and of k") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  auto d = derivations(k3);
  CHECK(d.graded_dim() == GradedDim{3, 2});
  for (Index k = 0; k < d.dim(); ++k)
    CHECK(is_derivation(k3, unflatten(d.vector(k), 3, 3), d.parity(k)));
  auto k = SuperAlgebra::from_products("k", SuperSpace{{"1"}, {0}}, Kind::jordan,
                                       [](Index, Index) { return vec({1}); });
  CHECK(derivations(k).dim() == 0);
  CHECK(inner_derivations(k).dim() == 0);
}

TEST_CASE("inner derivations of K3 are derivations") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const int pi = k3.parity(i), pj = k3.parity(j);
      Matrix c = supercommutator(k3.left_mult_basis(i), pi, k3.left_mult_basis(j), pj);
      CHECK(is_derivation(k3, c, (pi + pj) & 1));
    }
}

TEST_CASE("derivation dimension is invariant under basis permutation") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  // basis [e, y, x]
  const Index perm[3] = {0, 2, 1};
  auto permuted = SuperAlgebra::from_products("K3p", SuperSpace{{"e", "y", "x"}, {0, 1, 1}}, Kind::jordan,
                                              [&](Index i, Index j) {
                                                Vector p = k3.basis_product(perm[i], perm[j]);
                                                Vector out(3);
                                                for (Index k = 0; k < 3; ++k) out(k) = p(perm[k]);
                                                return out;
                                              });
  CHECK(derivations(permuted).graded_dim() == derivations(k3).graded_dim());
}

TEST_CASE("center, derived algebra and ideal closure") {
  gf::ModulusScope scope(3);
  auto ab = SuperAlgebra::from_products("ab", SuperSpace{{"a", "b"}, {0, 0}}, Kind::lie,
                                        [](Index, Index) { return Vector::Zero(2); });
  CHECK(derived_subalgebra(ab).dim() == 0);
  CHECK(center(ab).dim() == 2);
  auto s = sl2();
  CHECK(ideal_closure(s, Subspace::full(3)).dim() == 3);
  CHECK(center(s).dim() == 0);
  CHECK(derived_subalgebra(s).dim() == 3);
}

TEST_CASE("quotient projection is a surjective homomorphism with the ideal as kernel") {
  gf::ModulusScope scope(3);
  auto s = direct_sum(sl2(), sl2());
  // second summand is an ideal
  Matrix rows = Matrix::Zero(3, 6);
  for (Index i = 0; i < 3; ++i) rows(i, 3 + i) = Scalar(1);
  auto ideal = Subspace::span(rows);
  REQUIRE(is_ideal(s, ideal));
  auto q = quotient(s, ideal);
  CHECK(q.algebra.dim() == 3);
  GradedLinearMap f{s.space(), q.algebra.space(), q.projection, 0};
  auto h = hom_check(f, s, q.algebra);
  CHECK(h.homomorphism);
  CHECK(h.surjective);
  CHECK(kernel_basis(q.projection) == ideal);
  Matrix half_rows = Matrix::Zero(1, 6);
  half_rows(0, 0) = Scalar(1);
  CHECK_THROWS_AS(quotient(s, Subspace::span(half_rows)), std::invalid_argument);
}

TEST_CASE("graded tensor of K3 with itself") {
  gf::ModulusScope scope(3);
  auto k3 = k3_by_hand();
  auto k9 = graded_tensor(k3, k3);
  CHECK(k9.graded_dim() == GradedDim{5, 4});
  // (e⊗e)(e⊗e) = e⊗e ; (x⊗e)(y⊗e) = e⊗e
  CHECK(k9.basis_product(0, 0) == k9.unit_vector(0));
  CHECK(k9.basis_product(3, 6) == k9.unit_vector(0));
  // (e⊗x)(y⊗e) = (-1)^{|x||y|} (ey)⊗(xe) = -(1/2)(1/2) y⊗x
  Vector expect = Vector::Zero(9);
  expect(7) = -gf::half() * gf::half();
  CHECK(k9.basis_product(1, 6) == expect);
  CHECK(check_jordan_super(k9).passed());
}

TEST_CASE("hom_check: identity passes, perturbed map fails") {
  gf::ModulusScope scope(3);
  auto s = sl2();
  GradedLinearMap id{s.space(), s.space(), Matrix::Identity(3, 3), 0};
  auto h = hom_check(id, s, s);
  CHECK(h.homomorphism);
  CHECK(h.bijective());
  id.matrix(1, 1) = Scalar(2);
  auto bad = hom_check(id, s, s);
  CHECK_FALSE(bad.homomorphism);
  CHECK_FALSE(bad.report.witnesses.empty());
}

TEST_CASE("simplicity of sl2 and a non-simple direct sum") {
  gf::ModulusScope scope(3);
  auto v = is_simple(sl2());
  CHECK(v.status == Status::pass);
  auto w = is_simple(direct_sum(sl2(), sl2()));
  CHECK(w.status == Status::fail);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->dim() == 3);
}
