#include "doctest.h"
#include "supermagic/io.hpp"
#include "supermagic/jordan.hpp"
#include "supermagic/registry.hpp"
#include "supermagic/square.hpp"

using namespace supermagic;

TEST_CASE("K3 survives emit and parse") {
  gf::ModulusScope scope(3);
  const SuperAlgebra k3 = make_K3();
  const std::string text = emit_algebra(k3);
  const SuperAlgebra back = parse_algebra(text);
  CHECK(structurally_equal(back, k3));
  CHECK(back.name() == "K3");
  CHECK(back.space().labels == k3.space().labels);
  CHECK(emit_algebra(back) == text);
}

TEST_CASE("interleaved parities are written even-first") {
  gf::ModulusScope scope(3);
  const SuperAlgebra g = build_g(CompositionKind::S1, CompositionKind::S12).g;
  const SuperAlgebra back = parse_algebra(emit_algebra(g));
  CHECK(back.graded_dim() == g.graded_dim());
  CHECK(structurally_equal(back, even_first(g)));
  for (Index i = 1; i < back.dim(); ++i) CHECK(back.parity(i - 1) <= back.parity(i));
  CHECK(emit_algebra(back) == emit_algebra(g));
}

TEST_CASE("e8 file lists 248 labels") {
  gf::ModulusScope scope(3);
  const auto j = algebra_to_json(build_g(CompositionKind::S8, CompositionKind::S8).g);
  CHECK(j["even_basis"].size() == 248);
  CHECK(j["odd_basis"].empty());
}

TEST_CASE("malformed files are rejected") {
  gf::ModulusScope scope(3);
  auto base = nlohmann::json::parse(emit_algebra(make_K3()));

  auto zero = base;
  zero["structure"][0][3] = 0;
  CHECK_THROWS_AS(algebra_from_json(zero), FormatError);

  auto version = base;
  version["format_version"] = 2;
  CHECK_THROWS_AS(algebra_from_json(version), FormatError);

  auto range = base;
  range["structure"][0][2] = 3;
  CHECK_THROWS_AS(algebra_from_json(range), FormatError);

  auto coeff = base;
  coeff["structure"][0][3] = 3;
  CHECK_THROWS_AS(algebra_from_json(coeff), FormatError);

  auto repeated = base;
  repeated["structure"].push_back(base["structure"][0]);
  CHECK_THROWS_AS(algebra_from_json(repeated), FormatError);

  auto parity = base;
  parity["structure"].push_back({0, 0, 1, 1});  // e*e with an odd term
  CHECK_THROWS_AS(algebra_from_json(parity), FormatError);

  auto missing = base;
  missing.erase("kind");
  CHECK_THROWS_AS(algebra_from_json(missing), FormatError);

  CHECK_THROWS_AS(parse_algebra("{not json"), FormatError);

  gf::ModulusScope other(5);
  CHECK_THROWS_AS(algebra_from_json(base), FormatError);
}

TEST_CASE("registry names") {
  gf::ModulusScope scope(3);
  CHECK(algebra_by_name("S42").graded_dim() == GradedDim{4, 2});
  CHECK(algebra_by_name("C:S12").graded_dim() == GradedDim{1, 2});
  CHECK(algebra_by_name("H3:S12").graded_dim() == GradedDim{6, 6});
  CHECK(algebra_by_name("K9").graded_dim() == GradedDim{5, 4});
  CHECK(algebra_by_name("g:S4S12").graded_dim() == GradedDim{24, 26});
  CHECK(algebra_by_name("tri:S42").graded_dim() == GradedDim{9, 8});
  CHECK(algebra_by_name("der:H3:S12").graded_dim() == GradedDim{6, 8});
  CHECK(algebra_by_name("str:H3:S12").graded_dim() == GradedDim{12, 14});
  CHECK(algebra_by_name("pstr:H3:S12").graded_dim() == GradedDim{11, 14});
  CHECK(algebra_by_name("tkk:K3").graded_dim() == GradedDim{6, 8});
  CHECK(algebra_by_name("Q").dim() == 4);
  CHECK_THROWS_AS(algebra_by_name("S3"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_by_name("pstr:K3"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_by_name("g:S1S2,S4S4"), std::invalid_argument);
}

TEST_CASE("report json has no timing unless asked") {
  Report r;
  r.check = "x";
  r.fail("w");
  r.seconds = 1.5;
  auto j = report_to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["witnesses"].size() == 1);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(report_to_json(r, true)["seconds"] == 1.5);
}
