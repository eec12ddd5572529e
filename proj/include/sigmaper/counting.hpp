#pragma once

#include "sigmaper/markov.hpp"

#include <map>
#include <set>
#include <vector>

namespace sigma {

// Walk counts used to decide which (length, displacement) pairs carry
// periodic orbits avoiding the node set.
//
// A primitive closed walk of length n whose composite is expanding has
// exactly one fixed point; it is a node-orbit point iff the walk lifts to a
// closed walk of the endpoint-state graph. Composites of slope +-1 only come
// from cycles of full edges and are handled separately.
struct NonNodeOrbits {
  int n_max = 0;
  bool by_displacement = false;
  // displacements[n] holds every m such that some orbit of length n and
  // total displacement m avoids the nodes (m = 0 when not tracked).
  std::vector<std::set<long>> displacements;

  bool has_length(int n) const { return n >= 1 && n <= n_max && !displacements[n].empty(); }
};

NonNodeOrbits nonnode_orbits(const MarkovSystem& g, int n_max, bool by_displacement);

// Closed and primitive walk counts by (length, displacement); exposed for
// tests.
struct WalkCounts {
  std::vector<std::map<long, Z>> closed;
  std::vector<std::map<long, Z>> primitive;
};
WalkCounts walk_counts(const MarkovSystem& g, int n_max, bool by_displacement);

}  // namespace sigma
