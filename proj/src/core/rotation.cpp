#include "sigmaper/rotation.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>

namespace sigma {

Q loop_rotation(const MarkovGraph& g, const std::vector<int>& loop) {
  long m = loop_displacement(g, loop);
  return Q(m) / static_cast<long>(loop.size());
}

namespace {

std::vector<std::vector<int>> strongly_connected(const MarkovSystem& g) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on(n, false);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (int e : g.out[v]) {
      int w = g.edges[e].to;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(comp);
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comps;
}

// Minimum cycle mean of weights sgn*k inside one component (Karp).
Q karp_min_mean(const MarkovSystem& g, const std::vector<int>& comp, const std::vector<int>& pos, int sgn) {
  int s = static_cast<int>(comp.size());
  const long INF = LONG_MAX / 4;
  std::vector<std::vector<long>> D(s + 1, std::vector<long>(s, INF));
  D[0][0] = 0;
  for (int j = 0; j < s; ++j)
    for (int a = 0; a < s; ++a) {
      if (D[j][a] == INF) continue;
      for (int e : g.out[comp[a]]) {
        int b = pos[g.edges[e].to];
        if (b < 0) continue;
        long w = D[j][a] + sgn * g.edges[e].k;
        if (w < D[j + 1][b]) D[j + 1][b] = w;
      }
    }
  std::optional<Q> best;
  for (int v = 0; v < s; ++v) {
    if (D[s][v] == INF) continue;
    std::optional<Q> worst;
    for (int j = 0; j < s; ++j) {
      if (D[j][v] == INF) continue;
      Q val = Q(D[s][v] - D[j][v]) / (s - j);
      if (!worst || val > *worst) worst = val;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw Error(ErrorCode::Internal, "Karp found no cycle in a cyclic component");
  return *best;
}

bool has_cycle(const MarkovSystem& g, const std::vector<int>& comp, const std::vector<int>& pos) {
  if (comp.size() > 1) return true;
  for (int e : g.out[comp[0]])
    if (pos[g.edges[e].to] >= 0) return true;
  return false;
}

// Lexicographically smallest cycle (as a vertex sequence starting at its
// smallest vertex) among cycles of mean exactly num/den, sgn selecting the
// minimum (+1) or maximum (-1) problem.
CycleWitness extremal_witness(const MarkovSystem& g, const std::vector<int>& comp, const std::vector<int>& pos,
                              const Q& mean, int sgn) {
  long a = to_long(mean.get_num()), b = to_long(mean.get_den());
  int s = static_cast<int>(comp.size());
  auto weight = [&](const Edge& e) { return sgn * (b * e.k - a); };
  std::vector<long> pi(s, 0);
  for (int it = 0; it < s; ++it) {
    bool changed = false;
    for (int u = 0; u < s; ++u)
      for (int e : g.out[comp[u]]) {
        int v = pos[g.edges[e].to];
        if (v < 0) continue;
        long cand = pi[u] + weight(g.edges[e]);
        if (cand < pi[v]) {
          pi[v] = cand;
          changed = true;
        }
      }
    if (!changed) break;
  }
  // tight[u] = list of (v, edge) sorted by v.
  std::vector<std::vector<std::pair<int, int>>> tight(s);
  for (int u = 0; u < s; ++u) {
    for (int e : g.out[comp[u]]) {
      int v = pos[g.edges[e].to];
      if (v >= 0 && pi[u] + weight(g.edges[e]) == pi[v]) tight[u].push_back({v, e});
    }
    std::sort(tight[u].begin(), tight[u].end());
  }
  for (int start = 0; start < s; ++start) {
    // Vertices >= start that reach start through tight edges.
    std::vector<bool> reach(s, false);
    reach[start] = true;
    for (bool grow = true; grow;) {
      grow = false;
      for (int u = start; u < s; ++u) {
        if (reach[u]) continue;
        for (auto [v, e] : tight[u])
          if (v >= start && reach[v]) {
            reach[u] = true;
            grow = true;
            break;
          }
      }
    }
    bool closes = false;
    for (auto [v, e] : tight[start])
      if (v >= start && reach[v]) closes = true;
    if (!closes) continue;
    std::vector<int> path{start}, pedges;
    std::vector<bool> used(s, false);
    used[start] = true;
    std::function<bool(int)> dfs = [&](int u) {
      for (auto [v, e] : tight[u])
        if (v == start) {
          pedges.push_back(e);
          return true;
        }
      for (auto [v, e] : tight[u]) {
        if (v <= start || used[v] || !reach[v]) continue;
        used[v] = true;
        path.push_back(v);
        pedges.push_back(e);
        if (dfs(v)) return true;
        used[v] = false;
        path.pop_back();
        pedges.pop_back();
      }
      return false;
    };
    if (dfs(start)) {
      CycleWitness w;
      for (int v : path) w.vertices.push_back(comp[v]);
      w.edges = pedges;
      w.mean = mean;
      return w;
    }
  }
  throw Error(ErrorCode::Internal, "no witness cycle for an extremal mean");
}

// Extremal cycle means over the components containing a vertex in `keep`.
RotationInterval extremal_means(const MarkovGraph& g, const std::vector<bool>& keep) {
  if (g.degree != 1) throw Error(ErrorCode::InvalidArgument, "rotation interval needs a degree-1 lifting");
  auto comps = strongly_connected(g);
  std::sort(comps.begin(), comps.end());
  int n = static_cast<int>(g.vertices.size());
  std::optional<Q> lo, hi;
  std::vector<int> lo_comp, hi_comp;
  for (const auto& comp : comps) {
    if (!keep[comp[0]]) continue;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) pos[comp[i]] = i;
    if (!has_cycle(g, comp, pos)) continue;
    Q mn = karp_min_mean(g, comp, pos, 1);
    Q mx = -karp_min_mean(g, comp, pos, -1);
    if (!lo || mn < *lo) {
      lo = mn;
      lo_comp = comp;
    }
    if (!hi || mx > *hi) {
      hi = mx;
      hi_comp = comp;
    }
  }
  if (!lo) throw Error(ErrorCode::NoCycle, "the Markov graph has no cycle");
  RotationInterval R;
  R.lo = *lo;
  R.hi = *hi;
  auto witness = [&](const std::vector<int>& comp, const Q& mean, int sgn) {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) pos[comp[i]] = i;
    return extremal_witness(g, comp, pos, mean, sgn);
  };
  R.min_cycle = witness(lo_comp, R.lo, 1);
  R.max_cycle = witness(hi_comp, R.hi, -1);
  return R;
}

}  // namespace

RotationInterval rotation_interval(const MarkovGraph& g) {
  return extremal_means(g, std::vector<bool>(g.vertices.size(), true));
}

RotationInterval rotation_interval(const Lifting& F) { return rotation_interval(markov_graph(F)); }

RotationInterval real_rotation_interval(const MarkovGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<bool> reached(n, false);
  std::vector<int> todo;
  for (int v = 0; v < n; ++v)
    if (!g.vertices[v].branch) {
      reached[v] = true;
      todo.push_back(v);
    }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int e : g.out[v]) {
      int w = g.edges[e].to;
      if (!reached[w]) {
        reached[w] = true;
        todo.push_back(w);
      }
    }
  }
  return extremal_means(g, reached);
}

RotationInterval real_rotation_interval(const Lifting& F) { return real_rotation_interval(markov_graph(F)); }

}  // namespace sigma
