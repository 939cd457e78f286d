#include "doctest.h"
#include "supermagic/composition.hpp"

using namespace supermagic;

namespace {
Vector vec(std::initializer_list<int> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Scalar(x);
  return v;
}
}  // namespace

TEST_CASE("graded dimensions of the six Hurwitz algebras") {
  gf::ModulusScope scope(3);
  const GradedDim want[] = {{1, 0}, {2, 0}, {4, 0}, {8, 0}, {1, 2}, {4, 2}};
  int i = 0;
  for (auto k : kAllCompositionKinds) CHECK(make_hurwitz(k).algebra.graded_dim() == want[i++]);
}

TEST_CASE("composition axioms hold for every Hurwitz algebra and its para-Hurwitz algebra") {
  gf::ModulusScope scope(3);
  for (auto k : kAllCompositionKinds) {
    CAPTURE(to_string(k));
    auto c = make_hurwitz(k);
    auto r = check_hurwitz(c);
    CHECK(r.passed());
    CHECK(check_symmetric(para_hurwitz(c)).passed());
  }
}

TEST_CASE("superalgebras need characteristic 3") {
  gf::ModulusScope scope(5);
  CHECK_THROWS_AS(make_hurwitz(CompositionKind::S12), std::invalid_argument);
  CHECK_THROWS_AS(make_hurwitz(CompositionKind::S42), std::invalid_argument);
  for (auto k : {CompositionKind::S1, CompositionKind::S2, CompositionKind::S4, CompositionKind::S8})
    CHECK(check_hurwitz(make_hurwitz(k)).passed());
}

TEST_CASE("B(1,2) products and norm") {
  gf::ModulusScope scope(3);
  auto c = make_hurwitz(CompositionKind::S12);
  CHECK(c.algebra.basis_product(1, 2) == vec({1, 0, 0}));
  CHECK(c.norm(c.unit) == Scalar(1));
  CHECK(c.form()(1, 2) == Scalar(1));
  CHECK(standard_involution(c, vec({0, 1, 0})) == vec({0, -1, 0}));
}

TEST_CASE("B(4,2): u·v is the rank one operator w -> <w|u>v") {
  gf::ModulusScope scope(3);
  auto c = make_hurwitz(CompositionKind::S42);
  // <u|u> = 0, <v|u> = -1, so the operator sends u -> 0, v -> -v: matrix [[0,0],[0,-1]]
  CHECK(c.algebra.basis_product(4, 5) == vec({0, 0, 0, -1, 0, 0}));
  SymplecticPlane plane;
  Matrix f(2, 2);
  f << Scalar(1), Scalar(2), Scalar(0), Scalar(1);
  Vector x = vec({1, 2}), y = vec({2, 1});
  CHECK(plane.pair(f * x, y) == plane.pair(x, plane.involution(f) * y));
}

TEST_CASE("a degenerate form is rejected") {
  gf::ModulusScope scope(3);
  auto c = make_hurwitz(CompositionKind::S12);
  Matrix g = Matrix::Zero(3, 3);
  g(0, 0) = Scalar(2);
  SuperAlgebra degenerate("B12deg", c.algebra.space(), Kind::composition,
                          [&] {
                            std::vector<SparseVec> t;
                            for (Index i = 0; i < 3; ++i)
                              for (Index j = 0; j < 3; ++j) t.push_back(c.algebra.product(i, j));
                            return t;
                          }(),
                          g);
  CHECK_THROWS_AS(check_composition(degenerate), std::invalid_argument);
}

TEST_CASE("standard involution is involutive") {
  gf::ModulusScope scope(3);
  for (auto k : kAllCompositionKinds) {
    auto c = make_hurwitz(k);
    Matrix bar = standard_involution_matrix(c);
    CHECK(bar * bar == Matrix::Identity(c.dim(), c.dim()));
    CHECK(standard_involution(c, c.unit) == c.unit);
  }
}

TEST_CASE("k x k involution swaps the two factors") {
  gf::ModulusScope scope(3);
  auto c = make_hurwitz(CompositionKind::S2);
  // (a,b) = ((a+b)/2) 1 + ((a-b)/2) u ; (1,0) = (1 + u)/2 goes to (0,1) = (1 - u)/2
  const Scalar h = gf::half();
  Vector e1(2), e2(2);
  e1 << h, h;
  e2 << h, -h;
  CHECK(standard_involution(c, e1) == e2);
}

TEST_CASE("para-Hurwitz products") {
  gf::ModulusScope scope(3);
  auto s2 = make_symmetric(CompositionKind::S2);
  CHECK(s2.algebra.basis_product(0, 1) == vec({0, -1}));
  CHECK(s2.algebra.basis_product(1, 1) == vec({1, 0}));
  auto s12 = make_symmetric(CompositionKind::S12);
  CHECK(s12.algebra.basis_product(1, 2) == vec({1, 0, 0}));
  CHECK(s12.algebra.basis_product(0, 1) == vec({0, -1, 0}));
  CHECK(s12.algebra.basis_product(0, 2) == vec({0, 0, -1}));
  CHECK(make_symmetric(CompositionKind::S1).algebra.basis_product(0, 0) == vec({1}));
}

TEST_CASE("the split Cayley norm represents zero") {
  gf::ModulusScope scope(3);
  auto c = make_hurwitz(CompositionKind::S8);
  Vector e12 = Vector::Zero(8);
  e12(1) = Scalar(1);
  CHECK(c.norm(e12) == Scalar(0));
  CHECK(c.norm(c.unit) == Scalar(1));
}

TEST_CASE("Mat2 form is tr x tr y - tr xy") {
  gf::ModulusScope scope(7);
  auto c = make_hurwitz(CompositionKind::S4);
  // b(E11, E22) = 1, b(E12, E21) = -1, b(E11, E11) = 0
  CHECK(c.form()(0, 3) == Scalar(1));
  CHECK(c.form()(1, 2) == Scalar(-1));
  CHECK(c.form()(0, 0) == Scalar(0));
}
