#include "doctest.h"
#include "supermagic/jordan.hpp"

using namespace supermagic;

TEST_CASE("H3(C) dimensions and Jordan identities") {
  gf::ModulusScope scope(3);
  const GradedDim want[] = {{6, 0}, {9, 0}, {15, 0}, {27, 0}, {6, 6}, {15, 6}};
  int i = 0;
  for (auto k : kAllCompositionKinds) {
    CAPTURE(to_string(k));
    auto h = make_H3(k);
    CHECK(h.J.graded_dim() == want[i++]);
    CHECK(check_jordan_super(h.J).passed());
    for (Index b = 0; b < h.J.dim(); ++b) {
      CHECK(h.J.multiply(h.unit(), h.J.unit_vector(b)) == h.J.unit_vector(b));
    }
  }
}

TEST_CASE("H3 product examples") {
  gf::ModulusScope scope(3);
  auto h = make_H3(CompositionKind::S12);
  Vector a = Vector::Zero(3);
  a(1) = Scalar(1);
  // e0∘ι0(a) = 0
  CHECK(all_zero(h.J.multiply(h.J.unit_vector(0), h.iota_vec(0, a))));
  // L_{e0} on ι1(S) ⊕ ι2(S) is half the identity
  Matrix le0 = h.J.left_mult_basis(0);
  for (int i = 1; i < 3; ++i)
    for (Index b = 0; b < 3; ++b) {
      const Index k = h.iota(i, b);
      CHECK(le0.col(k) == gf::half() * h.J.unit_vector(k));
    }
}

TEST_CASE("K3 and K9") {
  gf::ModulusScope scope(3);
  auto k3 = make_K3();
  CHECK(k3.graded_dim() == GradedDim{1, 2});
  CHECK(check_jordan_super(k3).passed());
  CHECK(derivations(k3).graded_dim() == GradedDim{3, 2});
  auto k9 = make_K9();
  CHECK(k9.graded_dim() == GradedDim{5, 4});
  CHECK(check_jordan_super(k9).passed());
  // e⊗e is an idempotent; K3 has no unit, so neither does K9
  CHECK(k9.basis_product(0, 0) == k9.unit_vector(0));
  CHECK(k9.basis_product(0, 3) == gf::half() * k9.unit_vector(3));
  CHECK(k9.basis_product(0, 4) == gf::half() * gf::half() * k9.unit_vector(4));
  CHECK(is_simple(k9).status == Status::pass);
}

TEST_CASE("der K3 is the orthosymplectic superalgebra of the S12 form") {
  gf::ModulusScope scope(3);
  auto k3 = make_K3();
  CHECK(derivations(k3) == osp_basis(k3.space(), *k3.form()));
}

TEST_CASE("S12 coincides with K3 under 1->e, u->x, v->y") {
  gf::ModulusScope scope(3);
  auto s = make_symmetric(CompositionKind::S12).algebra;
  auto k3 = make_K3();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(s.basis_product(i, j) == k3.basis_product(i, j));
  CHECK(*s.form() == *k3.form());
}

TEST_CASE("derivation grading for H3(B(1,2)), H3(B(4,2)) and H3(k x k)") {
  gf::ModulusScope scope(3);
  auto g12 = derJ_grading(make_H3(CompositionKind::S12));
  CHECK(g12.report.passed());
  CHECK(g12.der.graded_dim() == GradedDim{6, 8});
  CHECK(g12.tri_part.graded_dim() == GradedDim{3, 2});
  for (const auto& p : g12.d_parts) CHECK(p.graded_dim() == GradedDim{1, 2});
  auto g42 = derJ_grading(make_H3(CompositionKind::S42));
  CHECK(g42.report.passed());
  CHECK(g42.der.graded_dim() == GradedDim{21, 14});
  auto g2 = derJ_grading(make_H3(CompositionKind::S2));
  CHECK(g2.report.passed());
  CHECK(g2.der.dim() == 8);
  CHECK(g2.tri_part.dim() == 2);
  for (const auto& p : g2.d_parts) CHECK(p.dim() == 2);
}

TEST_CASE("D_i identities") {
  gf::ModulusScope scope(3);
  for (auto k : kAllCompositionKinds) {
    CAPTURE(to_string(k));
    CHECK(check_D_identities(make_H3(k)).passed());
  }
}

TEST_CASE("inner derivations are derivations") {
  gf::ModulusScope scope(3);
  for (auto k : {CompositionKind::S2, CompositionKind::S12}) {
    auto h = make_H3(k);
    const auto& der = derivations_cached(h.J);
    auto inder = inner_derivations(h.J);
    for (Index b = 0; b < inder.dim(); ++b) CHECK(der.contains(inder.vector(b)));
  }
}

TEST_CASE("str and pstr of H3(B(1,2))") {
  gf::ModulusScope scope(3);
  auto h = make_H3(CompositionKind::S12);
  auto sp = make_str_pstr(h.J, h.unit());
  CHECK(sp.str.graded_dim() == GradedDim{12, 14});
  REQUIRE(sp.pstr.has_value());
  CHECK(sp.pstr->algebra.graded_dim() == GradedDim{11, 14});
  CHECK(center(sp.str).contains(sp.center_line));
  CHECK(check_super_jacobi(sp.str).passed());
  CHECK(check_super_jacobi(sp.pstr->algebra).passed());
  auto w = is_simple(sp.str);
  CHECK(w.status == Status::fail);
  REQUIRE(w.witness.has_value());
  CHECK(*w.witness == sp.center_line);
}

TEST_CASE("str K3 regression value") {
  gf::ModulusScope scope(3);
  auto sp = make_str_pstr(make_K3());
  CHECK_FALSE(sp.pstr.has_value());
  CHECK(sp.str.graded_dim() == GradedDim{4, 4});
}
