#pragma once

#include <string>
#include <vector>

#include "evanslewis/spectral.hpp"

namespace evanslewis {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// >= 20 functions spanning modes k = 0..5, every profile family, and
// multi-mode combinations; shared by the identity and cross-term criteria.
std::vector<TestFunction> identity_corpus();

// The full acceptance battery, one row per criterion, in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace evanslewis
