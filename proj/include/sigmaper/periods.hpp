#pragma once

#include "sigmaper/lifting.hpp"
#include "sigmaper/markov.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sigma {

// Exact period set restricted to [1..n_max].
class TruncatedPeriodSet {
 public:
  TruncatedPeriodSet() = default;
  explicit TruncatedPeriodSet(int n_max) : n_max_(n_max), member_(n_max + 1, false) {}
  static TruncatedPeriodSet of(int n_max, const std::set<long>& elems);
  static TruncatedPeriodSet range(int n_max, long from, long to);

  int n_max() const { return n_max_; }
  bool contains(long n) const { return n >= 1 && n <= n_max_ && member_[n]; }
  void insert(long n) {
    if (n >= 1 && n <= n_max_) member_[n] = true;
  }
  std::vector<long> elements() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  TruncatedPeriodSet restricted(int n_max) const;
  bool subset_of(const TruncatedPeriodSet& other) const;
  TruncatedPeriodSet united(const TruncatedPeriodSet& other) const;
  TruncatedPeriodSet minus(const TruncatedPeriodSet& other) const;

  friend bool operator==(const TruncatedPeriodSet& a, const TruncatedPeriodSet& b) {
    return a.n_max_ == b.n_max_ && a.member_ == b.member_;
  }

 private:
  int n_max_ = 0;
  std::vector<bool> member_;
};

// "{1,3,4,...,20}": runs of four or more are abbreviated.
std::string format_set(const std::vector<long>& elems);
std::string format_set(const TruncatedPeriodSet& s);

struct LiftedOrbit {
  SPoint representative;
  int period = 0;  // period mod 1
  long shift = 0;  // F^period(x) = x + shift
  std::optional<Q> rotation;  // shift / period for degree 1
  std::vector<SPoint> points;   // x, F(x), ..., F^{period-1}(x)
  std::vector<SPoint> reduced;  // points moved into re in [0,1), sorted
  bool lives_in_branches = false;
  bool large = false;
};

struct OrbitFlags {
  bool lives_in_branches = false;
  bool large = false;
};

// Least n <= max_n with F^n(x) - x in Z, with its shift.
std::optional<std::pair<int, long>> period_mod1(const Lifting& F, const SPoint& x, int max_n);
// Orbit data for a point known to be periodic mod 1 with period <= max_n.
LiftedOrbit make_orbit(const Lifting& F, const SPoint& x, int max_n);
OrbitFlags classify_orbit(const LiftedOrbit& orbit);

std::vector<LiftedOrbit> node_orbit_periods(const Lifting& F);

struct LoopSolution {
  bool family = false;
  SPoint point;  // fixed point, or a representative of the family
  long shift = 0;
  int start_vertex = 0;
  Q param_lo, param_hi;  // family range in the start vertex
};

std::vector<LoopSolution> solve_loop_fixed_points(const Lifting& F, const MarkovGraph& g,
                                                  const std::vector<int>& loop);

// Primitive closed walks up to max_len, one rotation each, and the orbits
// of their fixed points. `incomplete` is set when the budget runs out.
struct Enumeration {
  std::vector<LiftedOrbit> orbits;
  bool incomplete = false;
  bool stopped = false;  // stop_when accepted an orbit
  long explored = 0;
};

struct EnumerationOptions {
  int max_len = 8;
  long budget = 2000000;
  // When set, walks only visit vertices accepted by the filter.
  std::function<bool(int)> vertex_filter;
  bool include_nodes = true;
  // Only orbits of period >= min_len are recorded.
  int min_len = 1;
  // When set, only closed walks with this total displacement are solved.
  std::optional<long> displacement;
  // Ends the search once it returns true for a recorded orbit.
  std::function<bool(const LiftedOrbit&)> stop_when;
};

Enumeration enumerate_orbits(const Lifting& F, const MarkovGraph& g, const EnumerationOptions& opt);

TruncatedPeriodSet periods_mod1(const Lifting& F, int n_max);
TruncatedPeriodSet periods_for_rotation(const Lifting& F, long p, long q, int n_max);
// Per(alpha, F) for an irrational alpha: never a period.
TruncatedPeriodSet periods_for_irrational(int n_max);

enum class Shape { AllN, MissingOnlyOne, MissingOnlyTwo, Other };
Shape theorem_shape(const TruncatedPeriodSet& periods);
const char* shape_name(Shape s);

// Orbit type for a true orbit whose hull is a 3-star centered at Real(center).
std::set<int> orbit_type_3star(const std::function<SPoint(const SPoint&)>& map, const std::vector<SPoint>& orbit,
                               std::optional<long> center = std::nullopt);

// Blocks P_i(x) of a lifted orbit of period n*q and rotation p/q.
std::vector<std::vector<SPoint>> blocks(const Lifting& F, const LiftedOrbit& P, long p, long q, const SPoint& x);
bool has_increasing_block_structure(const std::vector<std::vector<SPoint>>& blocks, long p);
long reindex_shift(const std::vector<std::vector<SPoint>>& blocks, long p);

// F restricted to T_P and retracted, as a finite Markov tree map.
struct TreeRestriction {
  Q lo, hi;                 // hull of Re(P)
  std::vector<long> branches;  // integers i with B_i in T_P
  std::vector<SPoint> nodes;
  std::vector<SPoint> node_images;
  MarkovSystem graph;
  TruncatedPeriodSet true_periods;
};

TreeRestriction orbit_tree_restriction(const Lifting& F, const LiftedOrbit& P, int n_max);

}  // namespace sigma
