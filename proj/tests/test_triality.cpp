#include "doctest.h"
#include "supermagic/toolbox.hpp"
#include "supermagic/triality.hpp"

using namespace supermagic;

TEST_CASE("triality dimensions for the six symmetric composition algebras") {
  gf::ModulusScope scope(3);
  const GradedDim want[] = {{0, 0}, {2, 0}, {9, 0}, {28, 0}, {3, 2}, {9, 8}};
  int i = 0;
  for (auto k : kAllCompositionKinds) {
    CAPTURE(to_string(k));
    auto tri = tri_basis(make_symmetric(k));
    CHECK(tri.graded_dim() == want[i++]);
    for (Index b = 0; b < tri.dim(); ++b) CHECK(in_tri(tri.S, tri.element(b)));
    if (tri.dim() > 0) CHECK(check_super_jacobi(tri.as_lie).passed());
  }
}

TEST_CASE("osp dimensions") {
  gf::ModulusScope scope(3);
  auto s12 = make_symmetric(CompositionKind::S12);
  CHECK(osp_basis(s12.algebra.space(), *s12.algebra.form()).graded_dim() == GradedDim{3, 2});
  auto s2 = make_symmetric(CompositionKind::S2);
  CHECK(osp_basis(s2.algebra.space(), *s2.algebra.form()).dim() == 1);
  CHECK(osp_basis(SuperSpace{}, Matrix(0, 0)).dim() == 0);
}

TEST_CASE("tri(S12) is the diagonal copy of osp") {
  gf::ModulusScope scope(3);
  auto s = make_symmetric(CompositionKind::S12);
  auto tri = tri_basis(s);
  auto osp = osp_basis(s.algebra.space(), *s.algebra.form());
  for (Index k = 0; k < osp.dim(); ++k) {
    Matrix d = unflatten(osp.vector(k), 3, 3);
    TrialityElement t{{d, d, d}, osp.parity(k)};
    CHECK(tri.span.contains(flatten_triple(t)));
  }
}

TEST_CASE("sigma and t in S2") {
  gf::ModulusScope scope(3);
  auto s = make_symmetric(CompositionKind::S2);
  const Vector one = s.algebra.unit_vector(0), u = s.algebra.unit_vector(1);
  Matrix sigma = gf::half() * sigma_xy(s, one, 0, u, 0);
  CHECK(sigma * one == u);
  CHECK(sigma * u == one);
  auto t = t_xy(s, one, 0, u, 0);
  TrialityElement want{{Scalar(2) * sigma, -sigma, -sigma}, 0};
  CHECK(t == want);
  TrialityElement shifted{{-sigma, Scalar(2) * sigma, -sigma}, 0};
  CHECK(theta(t) == shifted);
  CHECK(t_span(s).dim() == 1);
}

TEST_CASE("t_{x,y} lies in tri(S) for every basis pair") {
  gf::ModulusScope scope(3);
  for (auto k : kAllCompositionKinds) {
    CAPTURE(to_string(k));
    auto s = make_symmetric(k);
    for (Index i = 0; i < s.dim(); ++i)
      for (Index j = 0; j < s.dim(); ++j) CHECK(in_tri(s, t_basis(s, i, j)));
    CHECK(t_basis(s, 0, 0).d[0] == Matrix::Zero(s.dim(), s.dim()));
  }
}

TEST_CASE("t_span fills tri(S) except for S2") {
  gf::ModulusScope scope(3);
  for (auto k : {CompositionKind::S1, CompositionKind::S4, CompositionKind::S8, CompositionKind::S12,
                 CompositionKind::S42}) {
    CAPTURE(to_string(k));
    auto s = make_symmetric(k);
    CHECK(t_span(s) == tri_basis(s).span);
  }
}

TEST_CASE("theta has order three and is an automorphism of tri(S)") {
  gf::ModulusScope scope(3);
  for (auto k : {CompositionKind::S4, CompositionKind::S12, CompositionKind::S42}) {
    auto tri = tri_basis(make_symmetric(k));
    Matrix m(tri.dim(), tri.dim());
    for (Index b = 0; b < tri.dim(); ++b) {
      auto t = tri.element(b);
      CHECK(theta(t, 3) == t);
      CHECK(in_tri(tri.S, theta(t)));
      m.col(b) = tri.coordinates(theta(t));
    }
    GradedLinearMap f{tri.as_lie.space(), tri.as_lie.space(), m, 0};
    auto h = hom_check(f, tri.as_lie, tri.as_lie);
    CHECK(h.homomorphism);
    CHECK(h.bijective());
  }
}

TEST_CASE("quaternion triality splits into three closed-form kernels") {
  for (std::uint32_t p : {3u, 7u}) {
    gf::ModulusScope scope(p);
    auto q = make_hurwitz(CompositionKind::S4);
    auto dec = quaternion_tri_decomposition(q);
    CHECK(dec.report.passed());
    CHECK(dec.tri.dim() == 9);
    for (const auto& k : dec.kernels) CHECK(k.dim() == 3);
  }
}
