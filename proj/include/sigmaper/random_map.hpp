#pragma once

#include "sigmaper/lifting.hpp"

#include <cstdint>

namespace sigma {

// Random Markov lifting with at most max_nodes nodes; node images are
// random nodes shifted by an integer in [-2, 2]. Deterministic in seed.
Lifting random_lifting(std::uint64_t seed, int degree, int max_nodes = 8);

}  // namespace sigma
