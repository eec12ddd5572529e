#pragma once

#include <string>
#include <vector>

namespace sigma {

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
  // Reported but not asserted.
  bool informational = false;
};

struct VerifyOptions {
  int n_max = 20;
  long budget = 2000000;
};

// Checks the stated rotation and period claims for one of the example
// maps: 5_1, 5_2, 6_1, 6_3, 6_4.
std::vector<Claim> verify_example(const std::string& id, const VerifyOptions& opt = {});
std::vector<std::string> example_ids();

}  // namespace sigma
