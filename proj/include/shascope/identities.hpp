#pragma once

#include <string>
#include <vector>

#include "shascope/curves.hpp"

namespace shascope {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Small curves used for the specialized trace checks.
const std::vector<ShortModel>& desk_curves();

// The exact division-polynomial identity suite over Z[A,B] (and Z[A,B,lambda]).
std::vector<IdentityCheck> run_identity_suite(unsigned max_n = 24);

}  // namespace shascope
