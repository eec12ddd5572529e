#include "sigmaper/counting.hpp"
#include "sigmaper/errors.hpp"
#include "sigmaper/periods.hpp"

#include <numeric>

namespace sigma {

TruncatedPeriodSet periods_mod1(const Lifting& F, int n_max) {
  TruncatedPeriodSet s(n_max);
  for (const auto& P : node_orbit_periods(F)) s.insert(P.period);
  auto nn = nonnode_orbits(markov_graph(F), n_max, false);
  for (int n = 1; n <= n_max; ++n)
    if (nn.has_length(n)) s.insert(n);
  return s;
}

TruncatedPeriodSet periods_for_rotation(const Lifting& F, long p, long q, int n_max) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "rotation denominator must be positive");
  if (F.degree() != 1) throw Error(ErrorCode::InvalidArgument, "rotation numbers need a degree-1 lifting");
  long g = std::gcd(p < 0 ? -p : p, q);
  p /= g;
  q /= g;
  TruncatedPeriodSet s(n_max);
  Q rho = Q(p) / q;
  for (const auto& P : node_orbit_periods(F))
    if (P.rotation && *P.rotation == rho) s.insert(P.period);
  auto nn = nonnode_orbits(markov_graph(F), n_max, true);
  for (long n = q; n <= n_max; n += q)
    if (nn.displacements[n].count(p * (n / q))) s.insert(n);
  return s;
}

TruncatedPeriodSet periods_for_irrational(int n_max) { return TruncatedPeriodSet(n_max); }

Shape theorem_shape(const TruncatedPeriodSet& s) {
  std::vector<long> missing;
  for (long n = 1; n <= s.n_max(); ++n)
    if (!s.contains(n)) missing.push_back(n);
  if (missing.empty()) return Shape::AllN;
  if (missing.size() == 1 && missing[0] == 1) return Shape::MissingOnlyOne;
  if (missing.size() == 1 && missing[0] == 2) return Shape::MissingOnlyTwo;
  return Shape::Other;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::AllN: return "AllN";
    case Shape::MissingOnlyOne: return "MissingOnlyOne";
    case Shape::MissingOnlyTwo: return "MissingOnlyTwo";
    case Shape::Other: return "Other";
  }
  return "Other";
}

}  // namespace sigma
