#include "doctest.h"
#include "supermagic/isomaps.hpp"
#include "supermagic/toolbox.hpp"

using namespace supermagic;

namespace {

void expect(const NamedIsomorphism& iso, GradedDim dims) {
  INFO(iso.summary().render());
  CHECK(iso.passed());
  CHECK(iso.domain.graded_dim() == dims);
  CHECK(iso.codomain.graded_dim() == dims);
}

}  // namespace

TEST_CASE("phi: g(S1,S) onto der H3(C)") {
  gf::ModulusScope scope(3);
  expect(build_phi1(CompositionKind::S12), {6, 8});
  expect(build_phi1(CompositionKind::S42), {21, 14});
  expect(build_phi1(CompositionKind::S2), {8, 0});
  expect(build_phi1(CompositionKind::S4), {21, 0});
  expect(build_phi1(CompositionKind::S8), {52, 0});
}

TEST_CASE("phi2: g(S2,S) onto pstr H3(C)") {
  gf::ModulusScope scope(3);
  expect(build_phi2(CompositionKind::S12), {11, 14});
  expect(build_phi2(CompositionKind::S42), {35, 20});
  expect(build_phi2(CompositionKind::S4), {35, 0});
  expect(build_phi2(CompositionKind::S8), {78, 0});
}

TEST_CASE("phi3: g(Qbar,S) onto T(Q,H3(C))") {
  gf::ModulusScope scope(3);
  expect(build_phi3(CompositionKind::S12), {24, 26});
  expect(build_phi3(CompositionKind::S42), {66, 32});
  expect(build_phi3(CompositionKind::S1), {21, 0});
  expect(build_phi3(CompositionKind::S8), {133, 0});
}

TEST_CASE("psi and its restriction") {
  gf::ModulusScope scope(3);
  expect(build_psi(), {21, 16});
  expect(build_psi_restricted(), {6, 8});
}

TEST_CASE("a perturbed phi map is caught") {
  gf::ModulusScope scope(3);
  auto iso = build_phi1(CompositionKind::S12);
  iso.map.matrix(0, iso.map.matrix.cols() - 1) += Scalar(1);
  auto h = hom_check(iso.map, iso.domain, iso.codomain);
  CHECK_FALSE(h.homomorphism);
}

TEST_CASE("theorem names") {
  CHECK(theorem_from_name("psi-restricted") == Theorem::psi_restricted);
  CHECK(to_string(Theorem::phi3) == "phi3");
  CHECK_THROWS(theorem_from_name("phi4"));
}

TEST_CASE("psi needs characteristic 3") {
  gf::ModulusScope scope(5);
  CHECK_THROWS_AS(build_psi(), std::invalid_argument);
}
