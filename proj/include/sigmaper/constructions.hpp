#pragma once

#include "sigmaper/lifting.hpp"
#include "sigmaper/orderings.hpp"
#include "sigmaper/periods.hpp"

#include <optional>
#include <vector>

namespace sigma {

// a holds a_1 < ... < a_{n-1} in (0,1); defaults to a_i = i/n.
Lifting example_5_1(int n, const std::optional<std::vector<Q>>& a = std::nullopt);
// params = {t2, t1, t0, z0, z1} with 0 < t2 < t1 < t0 < z0 < z1 < 1.
Lifting example_5_2(const std::optional<std::vector<Q>>& params = std::nullopt);
// a in (-1, 0). F(0) = -1, F(b) = b+1 and F(a) = b-n-1, where b is the tip
// of B_0. With shifted_tip the last condition reads F(a) = b-n+1 instead.
Lifting example_6_1(int n, const Q& a = make_q(-1, 2), bool shifted_tip = false);
// heights = {b_1, ..., b_{k-1}} with 1 > b_1 > ... > b_{k-1} > 0; a in (0,1).
Lifting example_6_3(int k, const std::optional<std::vector<Q>>& heights = std::nullopt, const Q& a = make_q(1, 2));
Lifting example_6_4();
// The 16-point orbit x_0, ..., x_15 of example_6_4.
std::vector<SPoint> example_6_4_orbit();

// Degree-1 circle lifting given by its values at nodes of [0,1); 0 must be a node.
struct CircleMapSpec {
  std::vector<std::pair<Q, Q>> nodes;
};
Lifting circle_collapse(const CircleMapSpec& circle);

// Points of the 3-star: leg 0 (left), 1 (right), 2 (up); s in [0,1] is the
// distance to the center.
struct StarPoint {
  int leg = 0;
  Q s;
  bool center() const { return s == 0; }
};
// Piecewise affine (by arclength) star map given at nodes; the center and
// the three tips must be nodes.
struct StarMapSpec {
  std::vector<std::pair<StarPoint, StarPoint>> nodes;
};
Lifting embed_star_map(const StarMapSpec& star);
SPoint embed_star_point(const StarPoint& p);

// Continuous piecewise affine self-map of [0,1] given at nodes (0 and 1 included).
struct IntervalMap {
  std::vector<std::pair<Q, Q>> nodes;
  Q eval(const Q& x) const;
};
IntervalMap stefan_interval_map(const ShValue& s);
IntervalMap double_interval_map(const IntervalMap& f);
TruncatedPeriodSet interval_map_periods(const IntervalMap& f, int n_max);

Lifting branch_family(int d, const IntervalMap& f);
Lifting branch_family(int d, const ShValue& s);

// Lifting with a period-6 orbit of rotation 1/2 whose blocks satisfy the
// 3-star hypotheses (type 3 block around the center 0, G(0) = 0).
struct TheoremDFixture {
  Lifting F;
  SPoint x;
  long p = 1, q = 2;
};
TheoremDFixture theorem_d_fixture();

}  // namespace sigma
