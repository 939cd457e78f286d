// One line per acceptance criterion at the default configuration
// (GF(3), seed 0, sampled Jacobi above dimension 140).

#include "supermagic/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  supermagic::RunConfig cfg;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--exhaustive") cfg.exhaustive = true;
    else ids.push_back(std::atoi(a.c_str()));
  }
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int id = 1; id <= supermagic::kCriterionCount; ++id) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    const auto res = supermagic::run_criterion(id, cfg);
    std::cout << res.line() << std::endl;
    ok = ok && res.passed();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = total < 15 * 60;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", total);
  std::cout << (in_time ? "PASS" : "FAIL") << "  full suite " << buf << " (budget 900s)" << std::endl;
  return ok && in_time ? 0 : 1;
}
