#pragma once

#include "sigmaper/lifting.hpp"
#include "sigmaper/partition.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace sigma {

// Covering I -> J + k realized by the subinterval [cyl_lo, cyl_hi] of I
// (in I's parameter). The restriction is param_J = alpha * param_I + beta.
struct Edge {
  int from = 0;
  int to = 0;
  long k = 0;
  int sign = 1;  // +1 when J is traversed in its own orientation
  bool full = false;
  Q cyl_lo, cyl_hi;
  Q alpha, beta;
};

// Vertices and signed, displacement-labelled coverings of a piecewise affine
// Markov map. Used both for liftings (vertices mod 1) and for finite trees
// (all displacements 0).
struct MarkovSystem {
  std::vector<BasicInterval> vertices;
  std::vector<Edge> edges;  // sorted by (from, to, k)
  std::vector<std::vector<int>> out;  // edge indices per vertex
  int degree = 1;

  void finalize();
  std::vector<int> edges_between(int from, int to) const;
};

using MarkovGraph = MarkovSystem;

// Splits the arc hull(img_lo, img_hi) into pieces and records each as an
// edge from vertex v. `breaks` gives interior breakpoints of a chart segment
// and `piece` identifies the vertex and shift of a chart piece.
struct ChartLocator {
  std::function<std::vector<Q>(bool branch, long base, const Q& lo, const Q& hi)> breaks;
  std::function<std::pair<int, long>(bool branch, long base, const Q& lo, const Q& hi)> piece;
};

void append_edges(MarkovSystem& g, int v, const SPoint& img_lo, const SPoint& img_hi, const ChartLocator& loc);

MarkovGraph markov_graph(const Lifting& F);

std::set<long> covers(const Lifting& F, int I, int J);
// Signs of the covering I -> J + k relative to the chosen orientations.
std::set<int> signed_cover(const Lifting& F, int I, bool I_reversed, int J, bool J_reversed, long k);

// Validates that the edge list closes up; returns the visited vertices.
std::vector<int> loop_vertices(const MarkovSystem& g, const std::vector<int>& loop);
// Product of edge signs; `reversed` flips the orientation of chosen vertices.
int loop_sign(const MarkovSystem& g, const std::vector<int>& loop, const std::vector<bool>& reversed = {});
long loop_displacement(const MarkovSystem& g, const std::vector<int>& loop);

std::string to_dot(const MarkovSystem& g);

}  // namespace sigma
