#pragma once

// Randomized property suites shared by the acceptance runner and the unit
// tests. Each suite reports how many maps it examined, how many triggered the
// hypothesis, and every violation found.

#include "sigmaper/lifting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace suites {

struct Outcome {
  int maps = 0;
  int triggered = 0;
  int checks = 0;
  std::vector<std::string> violations;
  bool incomplete = false;

  bool ok() const { return violations.empty() && !incomplete; }
  std::string summary() const;
};

// Branch-living orbits of period p <= 7 force sh_tail(p) (degrees -1..2).
Outcome theorem_e(int count, std::uint64_t first_seed = 1);
// A large branch-living orbit forces every period (degree 1).
Outcome theorem_f(int count, std::uint64_t first_seed = 1);
// 0 inside Rot_R leaves at most 1 or 2 out (degree 1).
Outcome theorem_g(int count, std::uint64_t first_seed = 1);
// Lemma-level identities on the fixtures and `random_maps` random maps.
Outcome lemmas(int random_maps, std::uint64_t first_seed = 1);

std::vector<sigma::Lifting> lemma_fixtures();

}  // namespace suites
