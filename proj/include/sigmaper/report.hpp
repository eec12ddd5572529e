#pragma once

#include "sigmaper/lifting.hpp"
#include "sigmaper/periods.hpp"
#include "sigmaper/rotation.hpp"

#include <string>

namespace sigma {

std::string rot_report(const Lifting& F);
std::string periods_report(const TruncatedPeriodSet& s);
std::string periods_at_report(long p, long q, const TruncatedPeriodSet& s);
std::string shape_report(const TruncatedPeriodSet& s);
std::string orbit_report(const LiftedOrbit& P);
std::string cycle_str(const MarkovGraph& g, const CycleWitness& w);

}  // namespace sigma
