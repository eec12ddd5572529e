#include "sigmaper/oracle.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>

namespace sigma {

namespace {

struct Oracle {
  const Lifting& F;
  int n_max;
  long budget;
  OracleResult res;
  std::vector<Q> real_nodes, heights;

  Oracle(const Lifting& f, int n, long b) : F(f), n_max(n), budget(b), res{TruncatedPeriodSet(n), false, 0} {
    for (const auto& s : F.nodes()) {
      if (s.point.is_real())
        real_nodes.push_back(s.point.x());
      else
        heights.push_back(s.point.height());
    }
  }

  static SPoint reduced(const SPoint& p) {
    long k = p.is_branch() ? p.base() : floor_long(p.x());
    return p.translate(-k);
  }

  // Least n with F^n(x) - x in Z, by plain iteration.
  int min_period(const SPoint& x, int limit) const {
    SPoint x0 = reduced(x), y = x;
    for (int n = 1; n <= limit; ++n) {
      y = F.eval(y);
      if (reduced(y) == x0) return n;
    }
    return 0;
  }

  void record(const SPoint& x, int j) {
    int n = min_period(x, j);
    if (n > 0) res.periods.insert(n);
  }

  // Offsets along the arc of points that are nodes mod 1, strictly inside.
  std::vector<Q> node_offsets(const SInterval& arc) const {
    std::vector<Q> out;
    Q acc = 0;
    for (const auto& seg : arc.segments()) {
      Q lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
      std::vector<Q> vals;
      if (seg.branch) {
        for (const auto& h : heights)
          if (lo < h && h < hi) vals.push_back(h);
        if (lo < 1 && 1 < hi) vals.push_back(Q(1));
      } else {
        for (long m = floor_long(lo); m <= floor_long(hi); ++m) {
          for (const auto& r : real_nodes) {
            Q v = r + m;
            if (lo < v && v < hi) vals.push_back(v);
          }
          Q v = m;
          if (lo < v && v < hi) vals.push_back(v);
        }
      }
      for (const auto& v : vals) out.push_back(acc + (seg.forward() ? Q(v - seg.from) : Q(seg.from - v)));
      // Chart transitions at the corners of the arc are nodes too.
      if (acc > 0) out.push_back(acc);
      acc += seg.length();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [&](const Q& s) { return s <= 0 || s >= acc; }), out.end());
    return out;
  }

  static bool chart_of(const SPoint& a, const SPoint& b, bool& branch, long& base) {
    SInterval arc(a, b);
    auto segs = arc.segments();
    if (segs.size() != 1) return false;
    branch = segs[0].branch;
    base = segs[0].base;
    return true;
  }

  static Q coord(const SPoint& p, bool branch) {
    if (branch) return p.is_branch() ? p.height() : Q(0);
    return p.x();
  }

  // F^j is the identity mod 1 on [u,v]. F^k is affine there for k | j, so the
  // generic period is the least k for which F^k moves both ends and the
  // midpoint by one common integer.
  void record_piece(const BasicInterval& I, const Q& u, const Q& v, int j) {
    auto shift = [](const SPoint& p) { return p.is_branch() ? p.base() : floor_long(p.x()); };
    std::vector<SPoint> probe{I.at(u), I.at((u + v) / 2), I.at(v)}, y = probe;
    for (int k = 1; k <= j; ++k) {
      for (auto& p : y) p = F.eval(p);
      if (j % k != 0) continue;
      long m = shift(y[0]) - shift(probe[0]);
      bool translated = true;
      for (std::size_t i = 0; i < y.size(); ++i) translated = translated && y[i] == probe[i].translate(m);
      if (translated) {
        res.periods.insert(k);
        return;
      }
    }
  }

  void fixed_points(const BasicInterval& I, const Q& u, const Q& v, const SPoint& yu, const SPoint& yv, int j) {
    SPoint pu = I.at(u), pv = I.at(v);
    if (reduced(yu) == reduced(pu)) record(pu, j);
    if (reduced(yv) == reduced(pv)) record(pv, j);
    if (yu == yv) {
      SPoint y0 = reduced(yu);
      if (y0.is_branch() == I.branch) {
        Q c = coord(y0, I.branch);
        if (c > u && c < v) record(I.at(c), j);
      }
      return;
    }
    bool branch;
    long base;
    if (!chart_of(yu, yv, branch, base) || branch != I.branch) return;
    Q a = coord(yu, branch), b = coord(yv, branch);
    // Image coordinate a + t(b - a) against u + t(v - u), t in (0,1).
    Q d0 = a - u, d1 = (b - a) - (v - u);
    if (!branch) {
      Q e0 = d0, e1 = d0 + d1;
      if (d1 == 0) {
        if (is_integer(d0)) record_piece(I, u, v, j);
        return;
      }
      Q lo = std::min(e0, e1), hi = std::max(e0, e1);
      for (long m = ceil_long(lo); Q(m) <= hi; ++m) {
        Q t = (m - d0) / d1;
        if (t > 0 && t < 1) record(I.at(u + t * (v - u)), j);
      }
      return;
    }
    if (d1 == 0) {
      if (d0 == 0) record_piece(I, u, v, j);
      return;
    }
    Q t = -d0 / d1;
    if (t > 0 && t < 1) record(I.at(u + t * (v - u)), j);
  }

  bool nothing_left(int j) const {
    for (int n = j; n <= n_max; ++n)
      if (!res.periods.contains(n)) return false;
    return true;
  }

  void dfs(const BasicInterval& I, const Q& u, const Q& v, const SPoint& yu, const SPoint& yv, int j) {
    if (res.incomplete) return;
    if (++res.pieces > budget) {
      res.incomplete = true;
      return;
    }
    if (j >= 1) fixed_points(I, u, v, yu, yv, j);
    if (j == n_max || nothing_left(j + 1)) return;
    SPoint fu = F.eval(yu), fv = F.eval(yv);
    SInterval arc(fu, fv);
    Q L = arc.length();
    if (L == 0) {
      dfs(I, u, v, fu, fv, j + 1);
      return;
    }
    std::vector<Q> cuts{Q(0)};
    for (const auto& s : node_offsets(arc)) cuts.push_back(s);
    cuts.push_back(L);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      Q cu = u + (v - u) * cuts[i] / L, cv = u + (v - u) * cuts[i + 1] / L;
      dfs(I, cu, cv, arc.at(cuts[i]), arc.at(cuts[i + 1]), j + 1);
    }
  }
};

}  // namespace

OracleResult pullback_oracle(const Lifting& F, int n_max, long budget) {
  Oracle o(F, n_max, budget);
  for (const auto& I : F.partition().intervals()) o.dfs(I, I.lo, I.hi, I.lo_point(), I.hi_point(), 0);
  return o.res;
}

}  // namespace sigma
