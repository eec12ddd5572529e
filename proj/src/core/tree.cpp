#include "sigmaper/counting.hpp"
#include "sigmaper/errors.hpp"
#include "sigmaper/periods.hpp"

#include <algorithm>
#include <map>

namespace sigma {

namespace {

struct Tree {
  Q lo, hi;
  long first = 0, last = -1;  // integers with branches in T_P

  bool has_branch(long j) const { return j >= first && j <= last; }
  bool contains(const SPoint& x) const {
    if (x.is_branch()) return has_branch(x.base());
    return x.x() >= lo && x.x() <= hi;
  }
  SPoint retract(const SPoint& x) const {
    if (contains(x)) return x;
    Q r = x.re();
    return SPoint::real(r < lo ? lo : hi);
  }
};

// Sorted node coordinates per chart: reals in [lo, hi] and heights per branch.
struct NodeSet {
  std::vector<Q> reals;
  std::map<long, std::vector<Q>> heights;

  void add(const SPoint& x) {
    if (x.is_real()) {
      reals.push_back(x.x());
    } else {
      heights[x.base()].push_back(x.height());
    }
  }
  void normalize() {
    auto tidy = [](std::vector<Q>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(reals);
    for (auto& [b, h] : heights) tidy(h);
  }
};

std::vector<SPoint> points_of(const NodeSet& N) {
  std::vector<SPoint> out;
  for (const auto& x : N.reals) out.push_back(SPoint::real(x));
  for (const auto& [b, hs] : N.heights)
    for (const auto& h : hs) out.push_back(SPoint::branch(b, h));
  return out;
}

std::vector<BasicInterval> pieces_of(const NodeSet& N) {
  std::vector<BasicInterval> out;
  for (std::size_t i = 0; i + 1 < N.reals.size(); ++i) {
    BasicInterval I;
    I.lo = N.reals[i];
    I.hi = N.reals[i + 1];
    I.name = "T_" + std::to_string(out.size() + 1);
    out.push_back(I);
  }
  for (const auto& [b, hs] : N.heights) {
    Q prev = 0;
    for (const auto& h : hs) {
      BasicInterval I;
      I.branch = true;
      I.base = b;
      I.lo = prev;
      I.hi = h;
      I.name = "T_" + std::to_string(out.size() + 1);
      out.push_back(I);
      prev = h;
    }
  }
  return out;
}

}  // namespace

TreeRestriction orbit_tree_restriction(const Lifting& F, const LiftedOrbit& P, int n_max) {
  if (P.shift != 0) throw Error(ErrorCode::NotTrueOrbit, "orbit has nonzero rotation, so it is not a true orbit");
  for (std::size_t i = 0; i < P.points.size(); ++i)
    if (F.eval(P.points[i]) != P.points[(i + 1) % P.points.size()])
      throw Error(ErrorCode::NotTrueOrbit, "points do not form an F-orbit");

  Tree T;
  T.lo = T.hi = P.points[0].re();
  for (const auto& x : P.points) {
    T.lo = std::min(T.lo, x.re());
    T.hi = std::max(T.hi, x.re());
  }
  T.first = ceil_long(T.lo);
  T.last = floor_long(T.hi);

  NodeSet N;
  for (const auto& x : P.points) N.add(x);
  N.add(SPoint::real(T.lo));
  N.add(SPoint::real(T.hi));
  for (long j = T.first; j <= T.last; ++j) {
    N.add(SPoint::real(Q(j)));
    N.add(SPoint::branch(j, Q(1)));
    for (const auto& h : F.partition().branch_heights()) N.add(SPoint::branch(j, h));
  }
  for (long j = T.first - 1; j <= T.last; ++j)
    for (const auto& r : F.partition().real_nodes()) {
      Q x = r + j;
      if (x >= T.lo && x <= T.hi) N.add(SPoint::real(x));
    }
  N.normalize();

  // Preimages of the boundary points lo and hi inside each piece.
  NodeSet extra = N;
  for (const auto& I : pieces_of(N)) {
    SPoint a = F.eval(I.lo_point()), b = F.eval(I.hi_point());
    SInterval arc(a, b);
    Q L = arc.length();
    if (L == 0) continue;
    for (const Q& e : {T.lo, T.hi}) {
      SPoint target = SPoint::real(e);
      if (!arc.contains(target)) continue;
      Q t = I.lo + arc.offset_of(target) / L * I.length();
      if (t > I.lo && t < I.hi) extra.add(I.at(t));
    }
  }
  extra.normalize();
  N = extra;

  TreeRestriction R;
  R.lo = T.lo;
  R.hi = T.hi;
  for (long j = T.first; j <= T.last; ++j) R.branches.push_back(j);
  R.nodes = points_of(N);
  auto fp = [&](const SPoint& x) { return T.retract(F.eval(x)); };
  for (const auto& x : R.nodes) R.node_images.push_back(fp(x));

  R.graph.degree = 1;
  R.graph.vertices = pieces_of(N);
  ChartLocator loc;
  loc.breaks = [&N](bool branch, long base, const Q& lo, const Q& hi) {
    std::vector<Q> out;
    const std::vector<Q>* src = &N.reals;
    static const std::vector<Q> none;
    if (branch) {
      auto it = N.heights.find(base);
      src = it == N.heights.end() ? &none : &it->second;
    }
    for (const auto& v : *src)
      if (lo < v && v < hi) out.push_back(v);
    return out;
  };
  const auto& verts = R.graph.vertices;
  loc.piece = [&verts](bool branch, long base, const Q& lo, const Q& hi) -> std::pair<int, long> {
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      const auto& I = verts[i];
      if (I.branch == branch && (!branch || I.base == base) && I.lo == lo && I.hi == hi) return {i, 0L};
    }
    throw Error(ErrorCode::Internal, "tree piece does not match a vertex");
  };
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    SPoint a = fp(verts[v].lo_point()), b = fp(verts[v].hi_point());
    if (!T.contains(F.eval(verts[v].lo_point())) && !T.contains(F.eval(verts[v].hi_point()))) continue;
    append_edges(R.graph, v, a, b, loc);
  }
  R.graph.finalize();

  // True periods: node cycles of F_P plus orbits avoiding the nodes.
  R.true_periods = TruncatedPeriodSet(n_max);
  std::map<SPoint, SPoint> next;
  for (std::size_t i = 0; i < R.nodes.size(); ++i) next[R.nodes[i]] = R.node_images[i];
  std::set<SPoint> done;
  for (const auto& x : R.nodes) {
    SPoint y = x;
    for (std::size_t i = 0; i < R.nodes.size(); ++i) y = next.at(y);
    if (done.count(y)) continue;
    int per = 0;
    SPoint z = y;
    do {
      done.insert(z);
      z = next.at(z);
      ++per;
    } while (z != y);
    R.true_periods.insert(per);
  }
  auto nn = nonnode_orbits(R.graph, n_max, false);
  for (int n = 1; n <= n_max; ++n)
    if (nn.has_length(n)) R.true_periods.insert(n);
  return R;
}

}  // namespace sigma
