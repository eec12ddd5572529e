#pragma once

#include "sigmaper/lifting.hpp"
#include "sigmaper/periods.hpp"

namespace sigma {

// Periods mod 1 found by refining the breakpoints of F^n through pullback
// and solving F^n(x) = x + k on each affine piece. Independent of the
// Markov graph.
struct OracleResult {
  TruncatedPeriodSet periods;
  bool incomplete = false;
  long pieces = 0;
};

OracleResult pullback_oracle(const Lifting& F, int n_max, long budget = 50000000);

}  // namespace sigma
