#include "sigmaper/errors.hpp"
#include "sigmaper/periods.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace sigma {

std::vector<LoopSolution> solve_loop_fixed_points(const Lifting& F, const MarkovGraph& g,
                                                  const std::vector<int>& loop) {
  auto vs = loop_vertices(g, loop);
  const BasicInterval& I0 = g.vertices[vs[0]];
  // Current parameter is a*t + b for the start parameter t in [lo, hi].
  Q a = 1, b = 0, lo = I0.lo, hi = I0.hi;
  long m = 0;
  for (int e : loop) {
    const Edge& E = g.edges[e];
    Q c0 = (E.cyl_lo - b) / a, c1 = (E.cyl_hi - b) / a;
    if (c0 > c1) std::swap(c0, c1);
    lo = std::max(lo, c0);
    hi = std::min(hi, c1);
    if (lo > hi) return {};
    a = E.alpha * a;
    b = E.alpha * b + E.beta;
    m += E.k;
  }
  std::vector<LoopSolution> out;
  if (a == 1) {
    if (b != 0) return {};
    LoopSolution s;
    s.family = true;
    s.point = I0.at((lo + hi) / 2);
    s.shift = m;
    s.start_vertex = vs[0];
    s.param_lo = lo;
    s.param_hi = hi;
    out.push_back(s);
    return out;
  }
  Q t = b / (1 - a);
  if (t < lo || t > hi) return {};
  LoopSolution s;
  s.point = I0.at(t);
  s.shift = F.degree() == 1 ? m : 0;
  s.start_vertex = vs[0];
  s.param_lo = s.param_hi = t;
  out.push_back(s);
  return out;
}

namespace {

bool minimal_primitive_rotation(const std::vector<int>& w) {
  std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // Compare rotation by r with w.
    for (std::size_t i = 0; i < n; ++i) {
      int x = w[(i + r) % n], y = w[i];
      if (x < y) return false;
      if (x > y) break;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

std::string orbit_key(const LiftedOrbit& P) {
  std::string k;
  for (const auto& p : P.reduced) k += p.str() + ";";
  return k;
}

long chart_shift(const SPoint& p) { return p.is_branch() ? p.base() : floor_long(p.x()); }

// A point of the family [lo, hi] with the generic period: the least k | n for
// which F^k moves both ends and the midpoint by one common integer. Only
// finitely many points of the family have a smaller period.
std::optional<SPoint> generic_point(const Lifting& F, const BasicInterval& I, const Q& lo, const Q& hi, int n) {
  std::vector<SPoint> probe{I.at(lo), I.at((lo + hi) / 2), I.at(hi)}, y = probe;
  int k0 = 0;
  for (int k = 1; k <= n && !k0; ++k) {
    for (auto& p : y) p = F.eval(p);
    if (n % k != 0) continue;
    long m = chart_shift(y[0]) - chart_shift(probe[0]);
    bool translated = true;
    for (std::size_t i = 0; i < y.size(); ++i) translated = translated && y[i] == probe[i].translate(m);
    if (translated) k0 = k;
  }
  if (!k0) return std::nullopt;
  for (long d : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
    for (long i = 1; i < d; ++i) {
      SPoint x = I.at(lo + (hi - lo) * i / d);
      auto pm = period_mod1(F, x, k0);
      if (pm && pm->first == k0) return x;
    }
  return std::nullopt;
}

}  // namespace

Enumeration enumerate_orbits(const Lifting& F, const MarkovGraph& g, const EnumerationOptions& opt) {
  Enumeration res;
  std::map<std::string, LiftedOrbit> found;
  auto add = [&](const SPoint& x) {
    auto pm = period_mod1(F, x, opt.max_len);
    if (!pm) return;
    LiftedOrbit P = make_orbit(F, x, opt.max_len);
    if (P.period < opt.min_len) return;
    if (opt.stop_when && opt.stop_when(P)) res.stopped = true;
    found.emplace(orbit_key(P), std::move(P));
  };
  if (opt.include_nodes)
    for (auto& P : node_orbit_periods(F))
      if (P.period >= opt.min_len && P.period <= opt.max_len) {
        if (opt.stop_when && opt.stop_when(P)) res.stopped = true;
        found.emplace(orbit_key(P), P);
      }

  int V = static_cast<int>(g.vertices.size());
  long k_min = 0, k_max = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    k_min = e ? std::min(k_min, g.edges[e].k) : g.edges[e].k;
    k_max = e ? std::max(k_max, g.edges[e].k) : g.edges[e].k;
  }
  auto closes = [&](long d) { return !opt.displacement || d == *opt.displacement; };
  // Can a walk with displacement d so far still close, possibly doubled, with
  // the wanted total within `left` more edges?
  auto reachable = [&](long d, int left) {
    if (!opt.displacement) return true;
    for (long r = 0; r <= left; ++r) {
      long lo = d + r * k_min, hi = d + r * k_max, t = *opt.displacement;
      if (lo <= t && t <= hi) return true;
      if (t % 2 == 0 && lo <= t / 2 && t / 2 <= hi) return true;
    }
    return false;
  };
  auto slope = [&](const std::vector<int>& loop) {
    Q a = 1;
    for (int e : loop) a *= g.edges[e].alpha;
    return a;
  };
  auto solve = [&](const std::vector<int>& loop) {
    for (const auto& sol : solve_loop_fixed_points(F, g, loop)) {
      add(sol.point);
      if (!sol.family) continue;
      const auto& I = g.vertices[sol.start_vertex];
      add(I.at(sol.param_lo));
      add(I.at(sol.param_hi));
      if (auto x = generic_point(F, I, sol.param_lo, sol.param_hi, static_cast<int>(loop.size()))) add(*x);
    }
  };
  auto accept = [&](int v) { return !opt.vertex_filter || opt.vertex_filter(v); };
  for (int s = 0; s < V && !res.incomplete && !res.stopped; ++s) {
    if (!accept(s)) continue;
    // Edge sequences starting at s through vertices >= s; the minimal
    // rotation of a cycle starts at its smallest vertex.
    std::vector<int> path;
    long disp = 0;
    auto dfs = [&](auto&& self, int u) -> void {
      if (res.incomplete || res.stopped) return;
      for (int e : g.out[u]) {
        if (res.stopped) return;
        if (++res.explored > opt.budget) {
          res.incomplete = true;
          return;
        }
        int v = g.edges[e].to;
        if (v < s || !accept(v)) continue;
        long d = disp + g.edges[e].k;
        int len = static_cast<int>(path.size()) + 1;
        if (!reachable(d, opt.max_len - len)) continue;
        path.push_back(e);
        disp = d;
        if (v == s && minimal_primitive_rotation(path)) {
          if (len >= opt.min_len && closes(d)) solve(path);
          // A loop reversing orientation with slope exactly -1 squares to a
          // family of points of twice its length.
          if (2 * len >= opt.min_len && 2 * len <= opt.max_len && closes(2 * d) && slope(path) == -1) {
            std::vector<int> twice(path);
            twice.insert(twice.end(), path.begin(), path.end());
            solve(twice);
          }
        }
        if (len < opt.max_len) self(self, v);
        path.pop_back();
        disp -= g.edges[e].k;
      }
    };
    dfs(dfs, s);
  }
  for (auto& [k, P] : found) res.orbits.push_back(std::move(P));
  std::sort(res.orbits.begin(), res.orbits.end(), [](const LiftedOrbit& a, const LiftedOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.reduced < b.reduced;
  });
  return res;
}

}  // namespace sigma
