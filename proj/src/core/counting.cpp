#include "sigmaper/counting.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

namespace sigma {

namespace {

struct CountGraph {
  int n = 0;
  std::vector<std::tuple<int, int, long>> edges;
};

using u128 = unsigned __int128;

Z to_z(u128 v) {
  Z hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  Z lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

bool add_into(u128& acc, const u128& x) {
  u128 r = acc + x;
  if (r < acc) return false;
  acc = r;
  return true;
}

bool add_into(Z& acc, const Z& x) {
  acc += x;
  return true;
}

Z as_z(const u128& v) { return to_z(v); }
Z as_z(const Z& v) { return v; }

// Closed walks by length and displacement, summed over start vertices.
template <class C>
bool closed_walks_impl(const CountGraph& g, int n_max, std::vector<std::map<long, Z>>& W) {
  long K = 0;
  for (auto& [u, v, k] : g.edges) K = std::max(K, k < 0 ? -k : k);
  long R = 2 * K * n_max + 1, off = K * n_max;
  W.assign(n_max + 1, {});
  std::vector<C> cur, nxt;
  for (int s = 0; s < g.n; ++s) {
    cur.assign(static_cast<std::size_t>(g.n) * R, C(0));
    cur[s * R + off] = C(1);
    for (int step = 1; step <= n_max; ++step) {
      nxt.assign(cur.size(), C(0));
      long span = K * (step - 1);
      for (auto& [u, v, k] : g.edges) {
        const C* src = &cur[u * R];
        C* dst = &nxt[v * R];
        for (long i = off - span; i <= off + span; ++i) {
          if (src[i] == C(0)) continue;
          if (!add_into(dst[i + k], src[i])) return false;
        }
      }
      cur.swap(nxt);
      long nspan = K * step;
      for (long i = off - nspan; i <= off + nspan; ++i) {
        const C& c = cur[s * R + i];
        if (c == C(0)) continue;
        W[step][i - off] += as_z(c);
      }
    }
  }
  return true;
}

std::vector<std::map<long, Z>> closed_walks(const CountGraph& g, int n_max) {
  std::vector<std::map<long, Z>> W;
  if (!closed_walks_impl<u128>(g, n_max, W)) closed_walks_impl<Z>(g, n_max, W);
  return W;
}

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::map<long, Z>> primitive_walks(const std::vector<std::map<long, Z>>& W, int n_max) {
  std::vector<std::map<long, Z>> P(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    std::set<long> ms;
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      long r = n / d;
      for (auto& [m, c] : W[d]) ms.insert(m * r);
    }
    for (long m : ms) {
      Z total = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        long r = n / d;
        if (m % r) continue;
        int mu = mobius(static_cast<int>(r));
        if (!mu) continue;
        auto it = W[d].find(m / r);
        if (it == W[d].end()) continue;
        if (mu > 0)
          total += it->second;
        else
          total -= it->second;
      }
      if (total != 0) P[n][m] = total;
    }
  }
  return P;
}

CountGraph base_graph(const MarkovSystem& g, bool by_displacement) {
  CountGraph c;
  c.n = static_cast<int>(g.vertices.size());
  for (const auto& e : g.edges) c.edges.emplace_back(e.from, e.to, by_displacement ? e.k : 0L);
  return c;
}

// States (vertex, side): side 0 is the lower endpoint, 1 the upper one.
CountGraph endpoint_graph(const MarkovSystem& g, bool by_displacement) {
  CountGraph c;
  c.n = 2 * static_cast<int>(g.vertices.size());
  for (const auto& e : g.edges) {
    const auto& I = g.vertices[e.from];
    long k = by_displacement ? e.k : 0L;
    bool fwd = e.sign > 0;
    if (e.cyl_lo == I.lo) c.edges.emplace_back(2 * e.from, 2 * e.to + (fwd ? 0 : 1), k);
    if (e.cyl_hi == I.hi) c.edges.emplace_back(2 * e.from + 1, 2 * e.to + (fwd ? 1 : 0), k);
  }
  return c;
}

Z lookup(const std::vector<std::map<long, Z>>& t, int n, long m) {
  if (n < 0 || n >= static_cast<int>(t.size())) return 0;
  auto it = t[n].find(m);
  return it == t[n].end() ? Z(0) : it->second;
}

}  // namespace

WalkCounts walk_counts(const MarkovSystem& g, int n_max, bool by_displacement) {
  WalkCounts wc;
  wc.closed = closed_walks(base_graph(g, by_displacement), n_max);
  wc.primitive = primitive_walks(wc.closed, n_max);
  return wc;
}

NonNodeOrbits nonnode_orbits(const MarkovSystem& g, int n_max, bool by_displacement) {
  NonNodeOrbits out;
  out.n_max = n_max;
  out.by_displacement = by_displacement;
  out.displacements.assign(n_max + 1, {});
  if (n_max < 1) return out;

  auto P = primitive_walks(closed_walks(base_graph(g, by_displacement), n_max), n_max);
  auto Xp = primitive_walks(closed_walks(endpoint_graph(g, by_displacement), n_max), n_max);

  // Cycles of full edges; the full subgraph is functional.
  int V = static_cast<int>(g.vertices.size());
  std::vector<int> full_out(V, -1);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    if (g.edges[i].full) {
      if (full_out[g.edges[i].from] >= 0) throw Error(ErrorCode::Internal, "two full edges leave one vertex");
      full_out[g.edges[i].from] = i;
    }
  std::vector<std::map<long, Z>> fam_pos(n_max + 1), fam_neg(n_max + 1);
  std::vector<int> state(V, 0);
  for (int s = 0; s < V; ++s) {
    if (state[s]) continue;
    std::vector<int> path;
    int v = s;
    while (v >= 0 && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = full_out[v] >= 0 ? g.edges[full_out[v]].to : -1;
    }
    if (v >= 0 && state[v] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      long len = path.end() - it;
      long disp = 0;
      int sign = 1;
      for (auto p = it; p != path.end(); ++p) {
        const Edge& e = g.edges[full_out[*p]];
        disp += by_displacement ? e.k : 0;
        sign *= e.sign;
      }
      if (len <= n_max) (sign > 0 ? fam_pos : fam_neg)[len][disp] += len;
    }
    for (int p : path) state[p] = 2;
  }

  for (int n = 1; n <= n_max; ++n) {
    std::set<long> ms;
    for (auto& [m, c] : P[n]) ms.insert(m);
    if (n % 2 == 0)
      for (auto& [m, c] : fam_neg[n / 2]) ms.insert(2 * m);
    for (long m : ms) {
      Z neg_half = (n % 2 == 0 && m % 2 == 0) ? lookup(fam_neg, n / 2, m / 2) : Z(0);
      Z node_only = lookup(Xp, n, m) - 2 * lookup(fam_pos, n, m) - 2 * neg_half;
      Z rest = lookup(P, n, m) - node_only;
      if (rest < 0)
        throw Error(ErrorCode::Internal, "negative orbit count at length " + std::to_string(n));
      if (rest > 0 || neg_half > 0) out.displacements[n].insert(m);
    }
  }
  return out;
}

}  // namespace sigma
