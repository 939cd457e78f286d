#include "doctest.h"
#include "supermagic/jordan.hpp"
#include "supermagic/tkk.hpp"

using namespace supermagic;

TEST_CASE("split quaternion basis") {
  gf::ModulusScope scope(3);
  auto q = make_split_quaternion();
  CHECK(check_quaternion(q).passed());
  const auto& a = q.Q.algebra;
  Vector minus_e2 = -q.e_vec(2);
  CHECK(a.multiply(q.e_vec(0), q.e_vec(1)) == minus_e2);
  CHECK(a.multiply(q.e_vec(1), q.e_vec(0)) == q.e_vec(2));
  CHECK(q.Q.norm(q.e_vec(0) + q.e_vec(1) + q.e_vec(2)) == Scalar(0));
  CHECK(q.b_q(q.e_vec(0), q.e_vec(0)) == Scalar(2));
}

TEST_CASE("quaternion checks hold for other primes too") {
  gf::ModulusScope scope(7);
  CHECK(check_quaternion(make_split_quaternion()).passed());
}

TEST_CASE("Tits algebra dimensions and Jacobi") {
  gf::ModulusScope scope(3);
  struct Case {
    SuperAlgebra h;
    GradedDim dims;
  };
  std::vector<Case> cases = {{make_K3(), {6, 8}}, {make_K9(), {21, 16}}, {make_H3(CompositionKind::S12).J, {24, 26}},
                             {make_H3(CompositionKind::S42).J, {66, 32}}};
  for (const auto& c : cases) {
    CAPTURE(c.h.name());
    auto t = tkk(c.h);
    CHECK(t.T.graded_dim() == c.dims);
    CHECK(check_super_jacobi(t.T).passed());
    CHECK(check_tits_blocks(t).passed());
  }
}
