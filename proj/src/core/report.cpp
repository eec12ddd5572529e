#include "sigmaper/report.hpp"

#include <sstream>

namespace sigma {

std::string cycle_str(const MarkovGraph& g, const CycleWitness& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const Edge& e = g.edges[w.edges[i]];
    os << g.vertices[w.vertices[i]].name << " -(" << e.k << ")-> ";
  }
  if (!w.vertices.empty()) os << g.vertices[w.vertices[0]].name;
  return os.str();
}

std::string rot_report(const Lifting& F) {
  MarkovGraph g = markov_graph(F);
  RotationInterval R = rotation_interval(g);
  std::ostringstream os;
  os << "rot = [" << to_string(R.lo) << ", " << to_string(R.hi) << "]\n";
  os << "min cycle: " << cycle_str(g, R.min_cycle) << "\n";
  os << "max cycle: " << cycle_str(g, R.max_cycle) << "\n";
  RotationInterval real = real_rotation_interval(g);
  os << "rot_R = [" << to_string(real.lo) << ", " << to_string(real.hi) << "]\n";
  return os.str();
}

std::string periods_report(const TruncatedPeriodSet& s) {
  return "periods[1.." + std::to_string(s.n_max()) + "] = " + format_set(s) + "\n";
}

std::string periods_at_report(long p, long q, const TruncatedPeriodSet& s) {
  return "periods(" + std::to_string(p) + "/" + std::to_string(q) + ")[1.." + std::to_string(s.n_max()) +
         "] = " + format_set(s) + "\n";
}

std::string shape_report(const TruncatedPeriodSet& s) { return std::string("shape = ") + shape_name(theorem_shape(s)) + "\n"; }

std::string orbit_report(const LiftedOrbit& P) {
  std::ostringstream os;
  os << "orbit period=" << P.period << " shift=" << P.shift;
  if (P.rotation) os << " rotation=" << to_string(*P.rotation);
  os << " branches=" << (P.lives_in_branches ? "yes" : "no") << " large=" << (P.large ? "yes" : "no") << " :";
  for (const auto& p : P.points) os << " " << p.str();
  os << "\n";
  return os.str();
}

}  // namespace sigma
