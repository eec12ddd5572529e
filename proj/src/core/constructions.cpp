#include "sigmaper/constructions.hpp"

#include "sigmaper/counting.hpp"
#include "sigmaper/errors.hpp"

#include <algorithm>
#include <map>

namespace sigma {

namespace {

SPoint R(const Q& x) { return SPoint::real(x); }
SPoint B(long m, const Q& h) { return SPoint::branch(m, h); }

void check_increasing(const std::vector<Q>& v, const Q& lo, const Q& hi, const std::string& what) {
  Q prev = lo;
  for (const auto& x : v) {
    if (!(x > prev)) throw Error(ErrorCode::BadPartition, what + " must be strictly increasing inside (" +
                                                              to_string(lo) + "," + to_string(hi) + ")");
    prev = x;
  }
  if (!(prev < hi)) throw Error(ErrorCode::BadPartition, what + " must stay below " + to_string(hi));
}

}  // namespace

Lifting example_5_1(int n, const std::optional<std::vector<Q>>& given) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "example 5.1 needs n >= 3");
  std::vector<Q> a;
  if (given) {
    if (static_cast<int>(given->size()) != n - 1)
      throw Error(ErrorCode::BadPartition, "example 5.1 needs a_1, ..., a_{n-1}");
    a = *given;
  } else {
    for (int i = 1; i < n; ++i) a.push_back(make_q(i, n));
  }
  check_increasing(a, 0, 1, "a_i");
  a.insert(a.begin(), Q(0));  // a[i] = a_i for 0 <= i <= n-1
  std::vector<std::pair<SPoint, SPoint>> m;
  m.push_back({R(0), R(a[n - 1] - 1)});
  m.push_back({R(a[1]), R(0)});
  m.push_back({R(a[2]), B(0, 1)});
  for (int i = 3; i <= n - 1; ++i) m.push_back({R(a[i]), R(a[i - 1])});
  m.push_back({B(0, 1), R(a[2] + 1)});
  return build_lifting(1, m);
}

Lifting example_5_2(const std::optional<std::vector<Q>>& given) {
  std::vector<Q> t = given ? *given : std::vector<Q>{make_q(1, 6), make_q(2, 6), make_q(3, 6), make_q(4, 6),
                                                     make_q(5, 6)};
  if (t.size() != 5) throw Error(ErrorCode::BadPartition, "example 5.2 needs t2, t1, t0, z0, z1");
  check_increasing(t, 0, 1, "t2 < t1 < t0 < z0 < z1");
  const Q &t2 = t[0], &t1 = t[1], &t0 = t[2], &z0 = t[3], &z1 = t[4];
  return build_lifting(1, std::vector<std::pair<SPoint, SPoint>>{
                              {R(0), R(0)},
                              {R(t2), R(t0 - 1)},
                              {R(t1), R(t2)},
                              {R(t0), R(t1)},
                              {R(z0), R(z1)},
                              {R(z1), B(1, 1)},
                              {B(0, 1), R(z0)},
                          });
}

Lifting example_6_1(int n, const Q& a, bool shifted_tip) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "example 6.1 needs n >= 3");
  if (!(a > -1 && a < 0)) throw Error(ErrorCode::BadPartition, "example 6.1 needs a in (-1,0)");
  return build_lifting(1, std::vector<std::pair<SPoint, SPoint>>{
                              {R(0), R(-1)},
                              {R(a + 1), B(shifted_tip ? 2 - n : -n, 1)},
                              {B(0, 1), B(1, 1)},
                          });
}

Lifting example_6_3(int k, const std::optional<std::vector<Q>>& given, const Q& a) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "example 6.3 needs k >= 3");
  if (!(a > 0 && a < 1)) throw Error(ErrorCode::BadPartition, "example 6.3 needs a in (0,1)");
  std::vector<Q> b{Q(1)};
  if (given) {
    if (static_cast<int>(given->size()) != k - 1) throw Error(ErrorCode::BadPartition, "example 6.3 needs b_1..b_{k-1}");
    for (const auto& h : *given) b.push_back(h);
  } else {
    for (int i = 1; i < k; ++i) b.push_back(1 - make_q(i, k));
  }
  for (int i = 1; i < k; ++i)
    if (!(b[i] < b[i - 1] && b[i] > 0)) throw Error(ErrorCode::BadPartition, "heights must decrease inside (0,1)");
  std::vector<std::pair<SPoint, SPoint>> m;
  m.push_back({R(0), R(-1)});
  m.push_back({R(a), B(-(k - 2), 1)});
  for (int i = 0; i <= k - 2; ++i) m.push_back({B(0, b[i]), B(1, b[i + 1])});
  m.push_back({B(0, b[k - 1]), R(a - 1)});
  return build_lifting(1, m);
}

namespace {

// x_0 and the branch coordinates (base, height) of x_1, ..., x_15.
struct Orbit64 {
  Q x0;
  std::vector<std::pair<long, Q>> rest;
};

Orbit64 orbit_6_4() {
  Orbit64 o;
  // x_1..x_11 climb B_-4..B_6, x_12..x_15 revisit B_1..B_4; heights grow
  // along the orbit so x_15 is the tip of B_4.
  o.x0 = make_q(1, 2);
  const long bases[15] = {-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4};
  for (int i = 0; i < 15; ++i) o.rest.push_back({bases[i], make_q(i + 1, 15)});
  return o;
}

}  // namespace

std::vector<SPoint> example_6_4_orbit() {
  Orbit64 o = orbit_6_4();
  std::vector<SPoint> pts{R(o.x0)};
  for (auto& [m, h] : o.rest) pts.push_back(B(m, h));
  return pts;
}

Lifting example_6_4() {
  auto pts = example_6_4_orbit();
  std::vector<std::pair<SPoint, SPoint>> m;
  std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto [p0, k] = reduce_mod1(pts[i]);
    m.push_back({p0, pts[(i + 1) % n].translate(-k)});
  }
  m.push_back({R(0), R(-5)});
  bool has_tip = std::any_of(pts.begin(), pts.end(), [](const SPoint& p) { return p.is_branch() && p.height() == 1; });
  if (!has_tip) throw Error(ErrorCode::Internal, "example 6.4 orbit must contain a branch tip");
  return build_lifting(1, m);
}

Lifting circle_collapse(const CircleMapSpec& circle) {
  std::vector<std::pair<SPoint, SPoint>> m;
  std::optional<Q> at0;
  for (auto& [x, y] : circle.nodes) {
    if (x < 0 || x >= 1) throw Error(ErrorCode::BadPartition, "circle nodes must lie in [0,1)");
    if (x == 0) at0 = y;
    m.push_back({R(x), R(y)});
  }
  if (!at0) throw Error(ErrorCode::MissingNode, "circle map needs 0 as a node");
  m.push_back({B(0, 1), R(*at0)});
  return build_lifting(1, m);
}

SPoint embed_star_point(const StarPoint& p) {
  if (p.s < 0 || p.s > 1) throw Error(ErrorCode::InvalidArgument, "star coordinate outside [0,1]");
  if (p.s == 0) return R(0);
  switch (p.leg) {
    case 0: return R(-p.s / 4);
    case 1: return R(p.s / 4);
    case 2: return B(0, p.s);
  }
  throw Error(ErrorCode::InvalidArgument, "star leg must be 0, 1 or 2");
}

Lifting embed_star_map(const StarMapSpec& star) {
  std::vector<NodeSpec> specs;
  bool center = false;
  bool tips[3] = {false, false, false};
  for (auto& [p, img] : star.nodes) {
    SPoint x = embed_star_point(p), y = embed_star_point(img);
    auto [x0, k] = reduce_mod1(x);
    specs.push_back({"", x0, y.translate(-k), false, 0});
    if (p.center()) center = true;
    if (p.s == 1) tips[p.leg] = true;
  }
  if (!center || !tips[0] || !tips[1] || !tips[2])
    throw Error(ErrorCode::MissingNode, "star map needs the center and all three tips as nodes");
  specs.push_back({"", R(make_q(1, 3)), R(make_q(1, 3)), false, 0});
  specs.push_back({"", R(make_q(2, 3)), R(make_q(2, 3)), false, 0});
  return build_lifting(1, std::move(specs));
}

Q IntervalMap::eval(const Q& x) const {
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto& [x0, y0] = nodes[i];
    const auto& [x1, y1] = nodes[i + 1];
    if (x >= x0 && x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  throw Error(ErrorCode::InvalidArgument, "point outside the interval map domain");
}

namespace {

IntervalMap tidy(IntervalMap f) {
  std::sort(f.nodes.begin(), f.nodes.end());
  f.nodes.erase(std::unique(f.nodes.begin(), f.nodes.end()), f.nodes.end());
  return f;
}

IntervalMap stefan_odd(long s) {
  IntervalMap f;
  if (s == 1) {
    f.nodes = {{Q(0), make_q(1, 2)}, {make_q(1, 2), make_q(1, 2)}, {Q(1), make_q(1, 2)}};
    return f;
  }
  long k = (s - 1) / 2;
  // x_{2k} < ... < x_2 < x_0 < x_1 < x_3 < ... < x_{2k-1}.
  auto pos = [&](long j) -> Q { return make_q(j % 2 == 0 ? k - j / 2 : k + (j + 1) / 2, 2 * k); };
  for (long j = 0; j < s; ++j) f.nodes.push_back({pos(j), pos((j + 1) % s)});
  return tidy(f);
}

}  // namespace

IntervalMap double_interval_map(const IntervalMap& f) {
  IntervalMap g;
  for (auto& [x, y] : f.nodes) {
    g.nodes.push_back({x / 3, make_q(2, 3) + y / 3});
    g.nodes.push_back({make_q(2, 3) + x / 3, x / 3});
  }
  return tidy(g);
}

IntervalMap stefan_interval_map(const ShValue& s) {
  if (s.two_inf) throw Error(ErrorCode::UnrepresentableTail, "2^inf is not realized by a finite Markov map");
  long odd = s.n, e = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++e;
  }
  IntervalMap f = stefan_odd(odd);
  for (long i = 0; i < e; ++i) f = double_interval_map(f);
  return f;
}

TruncatedPeriodSet interval_map_periods(const IntervalMap& f, int n_max) {
  MarkovSystem g;
  std::vector<Q> xs;
  for (auto& [x, y] : f.nodes) xs.push_back(x);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    BasicInterval I;
    I.lo = xs[i];
    I.hi = xs[i + 1];
    I.name = "I_" + std::to_string(i + 1);
    g.vertices.push_back(I);
  }
  ChartLocator loc;
  loc.breaks = [&xs](bool, long, const Q& lo, const Q& hi) {
    std::vector<Q> out;
    for (const auto& x : xs)
      if (lo < x && x < hi) out.push_back(x);
    return out;
  };
  loc.piece = [&g](bool, long, const Q& lo, const Q& hi) -> std::pair<int, long> {
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
      if (g.vertices[i].lo == lo && g.vertices[i].hi == hi) return {i, 0L};
    throw Error(ErrorCode::NotMarkov, "interval map is not Markov on its nodes");
  };
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    append_edges(g, v, R(f.nodes[v].second), R(f.nodes[v + 1].second), loc);
  g.finalize();

  TruncatedPeriodSet s(n_max);
  std::map<Q, Q> next(f.nodes.begin(), f.nodes.end());
  for (auto& [x, y] : f.nodes) {
    if (!next.count(y)) throw Error(ErrorCode::NotMarkov, "interval map node image is not a node");
    Q z = x;
    for (std::size_t i = 0; i < xs.size(); ++i) z = next[z];
    Q w = z;
    int per = 0;
    do {
      w = next[w];
      ++per;
    } while (w != z);
    s.insert(per);
  }
  auto nn = nonnode_orbits(g, n_max, false);
  for (int n = 1; n <= n_max; ++n)
    if (nn.has_length(n)) s.insert(n);
  return s;
}

Lifting branch_family(int d, const IntervalMap& f) {
  auto pt = [](const Q& y) { return y == 0 ? R(0) : B(0, y); };
  std::vector<std::pair<SPoint, SPoint>> m;
  for (auto& [x, y] : f.nodes) {
    if (x < 0 || x > 1 || y < 0 || y > 1) throw Error(ErrorCode::InvalidArgument, "interval map must act on [0,1]");
    m.push_back({pt(x), pt(y)});
  }
  return build_lifting(d, m);
}

Lifting branch_family(int d, const ShValue& s) { return branch_family(d, stefan_interval_map(s)); }

TheoremDFixture theorem_d_fixture() {
  Q a1 = make_q(3, 8), a2 = make_q(5, 8), a3 = make_q(7, 16);
  TheoremDFixture fx;
  fx.F = build_lifting(1, std::vector<std::pair<SPoint, SPoint>>{
                              {R(0), R(make_q(1, 2))},
                              {R(make_q(1, 4)), R(a3)},
                              {R(a1), R(make_q(3, 4))},
                              {R(a3), B(1, make_q(1, 2))},
                              {R(make_q(1, 2)), R(1)},
                              {R(a2), R(make_q(5, 4))},
                              {R(make_q(3, 4)), R(a2 + 1)},
                              {B(0, make_q(1, 2)), R(a1)},
                              {B(0, 1), R(make_q(1, 2))},
                          });
  fx.x = B(0, make_q(1, 2));
  return fx;
}

}  // namespace sigma
