#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "evanslewis/suite.hpp"

using namespace evanslewis;

TEST_CASE("acceptance battery") {
  const std::vector<CriterionResult> results = run_acceptance();
  REQUIRE(results.size() == 9);
  for (const CriterionResult& r : results) {
    std::printf("criterion %d (%s): %s -- %s\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str());
  }
  std::fflush(stdout);
  for (const CriterionResult& r : results) {
    INFO("criterion ", r.id, " (", r.name, "): ", r.detail);
    CHECK(r.pass);
  }
}
