#pragma once

// Test-side fixtures and brute-force oracles. Nothing here calls the period
// or rotation machinery of the library.

#include "sigmaper/constructions.hpp"
#include "sigmaper/lifting.hpp"
#include "sigmaper/markov.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace testing_support {

using sigma::make_q;
using sigma::Q;
using sigma::SPoint;

inline SPoint R(const Q& x) { return SPoint::real(x); }
inline SPoint B(long m, const Q& h) { return SPoint::branch(m, h); }

// Every node maps to itself.
inline sigma::Lifting identity_lifting() {
  return sigma::build_lifting(1, std::vector<std::pair<SPoint, SPoint>>{{R(0), R(0)}, {B(0, 1), B(0, 1)}});
}

// Circle maps for the circle-collapse fixtures, given at nodes of [0,1).
inline sigma::CircleMapSpec circle_full() {
  return {{{Q(0), Q(0)}, {make_q(1, 3), Q(-1)}, {make_q(2, 3), Q(2)}}};
}
// Rot = [1/3, 1/2], Per(1/3) = 3N, Per(1/2) = {2}.
inline sigma::CircleMapSpec circle_a() {
  return {{{Q(0), make_q(1, 4)}, {make_q(1, 4), make_q(2, 4)}, {make_q(1, 2), make_q(3, 4)}, {make_q(3, 4), make_q(6, 4)}}};
}
// Rot = [1/3, 1/2], Per(1/3) = {3}, Per(1/2) = 2N.
inline sigma::CircleMapSpec circle_b() {
  return {{{Q(0), make_q(1, 4)}, {make_q(1, 4), make_q(2, 4)}, {make_q(1, 2), make_q(4, 4)}, {make_q(3, 4), make_q(6, 4)}}};
}
// Rot = [0, 0].
inline sigma::CircleMapSpec circle_identity() { return {{{Q(0), Q(0)}, {make_q(1, 2), make_q(1, 2)}}}; }

// ---------------------------------------------------------------------------
// Piecewise affine maps of a star with `legs` legs of length 1 glued at the
// center. A one-legged star is the interval [0,1].

struct StarPt {
  int leg = 0;
  Q s;  // distance to the center
  bool operator==(const StarPt& o) const { return s == o.s && (s == 0 || leg == o.leg); }
  bool operator<(const StarPt& o) const {
    int la = s == 0 ? -1 : leg, lb = o.s == 0 ? -1 : o.leg;
    return la != lb ? la < lb : s < o.s;
  }
};

class StarOracle {
 public:
  // nodes[leg] = sorted (s, image) pairs; every leg must contain s = 0 and 1,
  // and the images at s = 0 must agree.
  StarOracle(int legs, std::vector<std::vector<std::pair<Q, StarPt>>> nodes) : legs_(legs), nodes_(std::move(nodes)) {
    for (auto& leg : nodes_) std::sort(leg.begin(), leg.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (int l = 0; l < legs_; ++l)
      for (std::size_t i = 0; i + 1 < nodes_[l].size(); ++i) pieces_.push_back({l, i});
  }

  static Q dist(const StarPt& a, const StarPt& b) {
    if (a.s != 0 && b.s != 0 && a.leg == b.leg) return abs(a.s - b.s);
    return a.s + b.s;
  }

  // Point at distance u from a along the arc [a, b].
  static StarPt along(const StarPt& a, const StarPt& b, const Q& u) {
    if (a.s != 0 && b.s != 0 && a.leg == b.leg) return {a.leg, b.s > a.s ? Q(a.s + u) : Q(a.s - u)};
    if (u <= a.s) return {a.leg, a.s - u};
    return {b.leg, u - a.s};
  }

  StarPt eval(const StarPt& x) const {
    const auto& leg = nodes_[x.s == 0 ? 0 : x.leg];
    for (std::size_t i = 0; i + 1 < leg.size(); ++i) {
      if (x.s >= leg[i].first && x.s <= leg[i + 1].first) {
        Q t = (x.s - leg[i].first) / (leg[i + 1].first - leg[i].first);
        const auto& a = leg[i].second;
        const auto& b = leg[i + 1].second;
        return canon(along(a, b, t * dist(a, b)));
      }
    }
    throw std::logic_error("star point outside the star");
  }

  // True periods up to n_max: node orbits plus fixed points of every closed
  // itinerary of length <= n_max, each checked by exact iteration.
  std::set<long> periods(int n_max) const {
    std::set<long> out;
    for (int l = 0; l < legs_; ++l)
      for (auto& [s, img] : nodes_[l]) record({l, s}, n_max, out);
    int P = static_cast<int>(pieces_.size());
    // cover[i] = list of (j, alpha, beta): param_i = alpha * param_j + beta on the sub-piece
    std::vector<std::vector<std::tuple<int, Q, Q>>> cover(P);
    for (int i = 0; i < P; ++i)
      for (int j = 0; j < P; ++j) {
        auto branch = inverse_branch(i, j);
        if (branch) cover[i].push_back({j, branch->first, branch->second});
      }
    std::vector<int> path;
    std::function<void(int, int, Q, Q)> dfs = [&](int start, int cur, Q A, Q Bc) {
      int len = static_cast<int>(path.size());
      for (auto& [j, a, b] : cover[cur]) {
        // x_cur = a * x_j + b, and x_start = A * x_cur + Bc.
        Q A2 = A * a, B2 = A * b + Bc;
        if (j == start) {
          const auto& [l, i] = pieces_[start];
          Q lo = nodes_[l][i].first, hi = nodes_[l][i + 1].first;
          if (A2 != 1) {
            Q x = B2 / (1 - A2);
            if (x >= lo && x <= hi) record({l, x}, len + 1, out);
          } else if (B2 == 0) {
            record_piece(l, lo, hi, len + 1, out);
          }
        }
        if (len + 1 < n_max) {
          path.push_back(j);
          dfs(start, j, A2, B2);
          path.pop_back();
        }
      }
    };
    for (int s = 0; s < P; ++s) dfs(s, s, Q(1), Q(0));
    std::set<long> clipped;
    for (long n : out)
      if (n <= n_max) clipped.insert(n);
    return clipped;
  }

 private:
  int legs_;
  std::vector<std::vector<std::pair<Q, StarPt>>> nodes_;
  std::vector<std::pair<int, std::size_t>> pieces_;

  static StarPt canon(StarPt p) {
    if (p.s == 0) p.leg = 0;
    return p;
  }

  void record(const StarPt& x0, int limit, std::set<long>& out) const {
    StarPt x = canon(x0), y = x;
    for (int n = 1; n <= limit; ++n) {
      y = eval(y);
      if (y == x) {
        out.insert(n);
        return;
      }
    }
  }

  // The itinerary map is the identity on [lo, hi]; the k-th iterate is affine
  // there, so the generic period is the least k fixing both ends and the middle.
  void record_piece(int l, const Q& lo, const Q& hi, int len, std::set<long>& out) const {
    std::vector<StarPt> probe{canon({l, lo}), canon({l, (lo + hi) / 2}), canon({l, hi})}, y = probe;
    for (int k = 1; k <= len; ++k) {
      bool fixed = true;
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = eval(y[i]);
        fixed = fixed && y[i] == probe[i];
      }
      if (fixed && len % k == 0) {
        out.insert(k);
        return;
      }
    }
  }

  // Sub-piece of piece i mapped onto piece j, as param_i = alpha * param_j + beta.
  std::optional<std::pair<Q, Q>> inverse_branch(int i, int j) const {
    const auto& [li, ii] = pieces_[i];
    const auto& [lj, jj] = pieces_[j];
    const auto& ni = nodes_[li];
    StarPt a = ni[ii].second, b = ni[ii + 1].second;
    Q L = dist(a, b);
    if (L == 0) return std::nullopt;
    StarPt c{lj, nodes_[lj][jj].first}, d{lj, nodes_[lj][jj + 1].first};
    c = canon(c);
    d = canon(d);
    // Both endpoints of piece j must lie on the arc [a, b].
    Q uc = dist(a, c), ud = dist(a, d);
    if (uc + dist(c, b) != L || ud + dist(d, b) != L) return std::nullopt;
    // Distance along the arc is affine in s_j on piece j: u = uc + (s - s_c) * (ud - uc) / (s_d - s_c).
    Q sc = nodes_[lj][jj].first, sd = nodes_[lj][jj + 1].first;
    Q k = (ud - uc) / (sd - sc);
    // param_i = lo_i + u / L * (hi_i - lo_i)
    Q w = (ni[ii + 1].first - ni[ii].first) / L;
    Q alpha = w * k;
    Q beta = ni[ii].first + w * (uc - k * sc);
    return std::make_pair(alpha, beta);
  }
};

inline StarOracle interval_oracle(const sigma::IntervalMap& f) {
  std::vector<std::pair<Q, StarPt>> leg;
  for (auto& [x, y] : f.nodes) leg.push_back({x, StarPt{0, y}});
  return StarOracle(1, {leg});
}

// ---------------------------------------------------------------------------
// Extremal cycle means by enumerating every simple cycle.

struct CycleMeans {
  Q lo, hi;
  bool any = false;
};

inline CycleMeans brute_force_cycle_means(const sigma::MarkovGraph& g) {
  CycleMeans r;
  int V = static_cast<int>(g.vertices.size());
  std::vector<bool> on(V, false);
  std::function<void(int, int, long, int)> dfs = [&](int start, int v, long disp, int len) {
    for (int e : g.out[v]) {
      const auto& E = g.edges[e];
      if (E.to < start) continue;
      long d = disp + E.k;
      if (E.to == start) {
        Q mean = Q(d) / (len + 1);
        if (!r.any || mean < r.lo) r.lo = mean;
        if (!r.any || mean > r.hi) r.hi = mean;
        r.any = true;
      } else if (!on[E.to]) {
        on[E.to] = true;
        dfs(start, E.to, d, len + 1);
        on[E.to] = false;
      }
    }
  };
  for (int s = 0; s < V; ++s) {
    on[s] = true;
    dfs(s, s, 0, 0);
    on[s] = false;
  }
  return r;
}

}  // namespace testing_support
