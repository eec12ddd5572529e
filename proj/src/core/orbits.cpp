#include "sigmaper/errors.hpp"
#include "sigmaper/periods.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sigma {

TruncatedPeriodSet TruncatedPeriodSet::of(int n_max, const std::set<long>& elems) {
  TruncatedPeriodSet s(n_max);
  for (long n : elems) s.insert(n);
  return s;
}

TruncatedPeriodSet TruncatedPeriodSet::range(int n_max, long from, long to) {
  TruncatedPeriodSet s(n_max);
  for (long n = std::max(1L, from); n <= std::min<long>(to, n_max); ++n) s.insert(n);
  return s;
}

std::vector<long> TruncatedPeriodSet::elements() const {
  std::vector<long> r;
  for (long n = 1; n <= n_max_; ++n)
    if (member_[n]) r.push_back(n);
  return r;
}

std::size_t TruncatedPeriodSet::size() const { return elements().size(); }

TruncatedPeriodSet TruncatedPeriodSet::restricted(int n_max) const {
  TruncatedPeriodSet r(n_max);
  for (long n : elements()) r.insert(n);
  return r;
}

bool TruncatedPeriodSet::subset_of(const TruncatedPeriodSet& other) const {
  for (long n : elements())
    if (!other.contains(n)) return false;
  return true;
}

TruncatedPeriodSet TruncatedPeriodSet::united(const TruncatedPeriodSet& other) const {
  TruncatedPeriodSet r(std::max(n_max_, other.n_max_));
  for (long n : elements()) r.insert(n);
  for (long n : other.elements()) r.insert(n);
  return r;
}

TruncatedPeriodSet TruncatedPeriodSet::minus(const TruncatedPeriodSet& other) const {
  TruncatedPeriodSet r(n_max_);
  for (long n : elements())
    if (!other.contains(n)) r.insert(n);
  return r;
}

std::string format_set(const std::vector<long>& e) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j + 1 < e.size() && e[j + 1] == e[j] + 1) ++j;
    auto put = [&](const std::string& s) {
      if (!first) os << ",";
      os << s;
      first = false;
    };
    if (j - i + 1 >= 4) {
      put(std::to_string(e[i]));
      put(std::to_string(e[i + 1]));
      put("...");
      put(std::to_string(e[j]));
    } else {
      for (std::size_t t = i; t <= j; ++t) put(std::to_string(e[t]));
    }
    i = j + 1;
  }
  os << "}";
  return os.str();
}

std::string format_set(const TruncatedPeriodSet& s) { return format_set(s.elements()); }

std::optional<std::pair<int, long>> period_mod1(const Lifting& F, const SPoint& x, int max_n) {
  auto [x0, kx] = reduce_mod1(x);
  SPoint y = x;
  for (int n = 1; n <= max_n; ++n) {
    y = F.eval(y);
    auto [y0, ky] = reduce_mod1(y);
    if (y0 == x0) return std::make_pair(n, ky - kx);
  }
  return std::nullopt;
}

OrbitFlags classify_orbit(const LiftedOrbit& P) {
  OrbitFlags f;
  f.lives_in_branches = std::all_of(P.points.begin(), P.points.end(), [](const SPoint& p) { return p.in_B(); });
  if (P.shift == 0 && P.rotation && *P.rotation == 0) {
    Q lo = P.points[0].re(), hi = lo;
    for (const auto& p : P.points) {
      lo = std::min(lo, p.re());
      hi = std::max(hi, p.re());
    }
    f.large = hi - lo >= 1;
  }
  return f;
}

LiftedOrbit make_orbit(const Lifting& F, const SPoint& x, int max_n) {
  auto pm = period_mod1(F, x, max_n);
  if (!pm) throw Error(ErrorCode::Internal, x.str() + " is not periodic mod 1 within " + std::to_string(max_n));
  LiftedOrbit P;
  P.representative = x;
  P.period = pm->first;
  P.shift = pm->second;
  if (F.degree() == 1) P.rotation = Q(P.shift) / P.period;
  SPoint y = x;
  for (int i = 0; i < P.period; ++i) {
    P.points.push_back(y);
    P.reduced.push_back(reduce_mod1(y).first);
    y = F.eval(y);
  }
  std::sort(P.reduced.begin(), P.reduced.end());
  auto f = classify_orbit(P);
  P.lives_in_branches = f.lives_in_branches;
  P.large = f.large;
  return P;
}

std::vector<LiftedOrbit> node_orbit_periods(const Lifting& F) {
  // The reduced node set is invariant, so every node is preperiodic.
  std::vector<LiftedOrbit> out;
  std::set<SPoint> seen;
  int n_nodes = static_cast<int>(F.nodes().size()) + 1;
  for (const auto& spec : F.nodes()) {
    SPoint y = spec.point;
    for (int i = 0; i < n_nodes; ++i) y = reduce_mod1(F.eval(y)).first;
    if (seen.count(y)) continue;
    LiftedOrbit P = make_orbit(F, y, n_nodes);
    for (const auto& r : P.reduced) seen.insert(r);
    out.push_back(P);
  }
  // Real(1) ~ Real(0) and Branch(0,1) are nodes too; both covered above.
  std::sort(out.begin(), out.end(), [](const LiftedOrbit& a, const LiftedOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.reduced < b.reduced;
  });
  return out;
}

}  // namespace sigma
