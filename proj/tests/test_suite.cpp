#include "doctest.h"
#include "supermagic/suite.hpp"

using namespace supermagic;

TEST_CASE("outside characteristic 3 the super algebras are refused and the rest passes") {
  RunConfig cfg;
  cfg.p = 5;
  for (int id : {1, 2, 4, 10, 12}) {
    auto res = run_criterion(id, cfg);
    INFO(res.line());
    CHECK(res.passed());
    bool saw_reject = false;
    for (const auto& r : res.reports)
      if (r.check.rfind("reject:", 0) == 0) saw_reject = true;
    if (id == 1 || id == 2) CHECK(saw_reject);
  }
}

TEST_CASE("criteria ids are bounded") {
  CHECK_THROWS(run_criterion(0, RunConfig{}));
  CHECK_THROWS(run_criterion(13, RunConfig{}));
}

TEST_CASE("run_all is sorted and deterministic") {
  RunConfig cfg;
  cfg.p = 7;
  auto a = run_all(cfg);
  auto b = run_all(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == b[i].check);
    CHECK(a[i].witnesses == b[i].witnesses);
    if (i) CHECK(a[i - 1].check <= a[i].check);
  }
}
