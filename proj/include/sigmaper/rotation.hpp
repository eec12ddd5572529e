#pragma once

#include "sigmaper/markov.hpp"

#include <string>
#include <vector>

namespace sigma {

struct CycleWitness {
  std::vector<int> vertices;
  std::vector<int> edges;
  Q mean;
};

// Markov rotation interval: extremal mean displacement over all cycles.
struct RotationInterval {
  Q lo, hi;
  CycleWitness min_cycle, max_cycle;
};

Q loop_rotation(const MarkovGraph& g, const std::vector<int>& loop);
RotationInterval rotation_interval(const MarkovGraph& g);
RotationInterval rotation_interval(const Lifting& F);
// Rot_R: cycles reachable from a real basic interval, the rotation numbers of
// real points. Equals rotation_interval when F(R) = S.
RotationInterval real_rotation_interval(const MarkovGraph& g);
RotationInterval real_rotation_interval(const Lifting& F);

}  // namespace sigma
