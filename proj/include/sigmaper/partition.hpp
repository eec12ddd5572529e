#pragma once

#include "sigmaper/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sigma {

// A chart segment used as a vertex of a Markov system. Real segments are
// parametrized by x, branch segments by height; lo < hi always.
struct BasicInterval {
  bool branch = false;
  long base = 0;
  Q lo, hi;
  std::string name;

  Q length() const { return hi - lo; }
  SPoint at(const Q& param) const;
  SPoint lo_point() const { return at(lo); }
  SPoint hi_point() const { return at(hi); }
  SInterval interval() const { return SInterval(lo_point(), hi_point()); }
};

// Node set reduced mod 1 together with the basic intervals of the
// fundamental domain {re in [0,1)}.
class BasicPartition {
 public:
  BasicPartition() = default;
  // Real nodes must lie in [0,1); branch nodes on B_0. Real(0) and
  // Branch(0,1) are added when missing.
  explicit BasicPartition(const std::vector<SPoint>& nodes);

  const std::vector<Q>& real_nodes() const { return real_; }
  const std::vector<Q>& branch_heights() const { return heights_; }
  const std::vector<BasicInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }

  bool is_node(const SPoint& p) const;  // modulo integer translation
  // Interval of the fundamental domain containing p - k, where p lies in
  // that interval translated by k. Prefers the interval where p is not the
  // upper endpoint.
  struct Location {
    int index;
    long shift;
    Q param;
  };
  Location locate(const SPoint& p) const;

  // Breakpoints strictly inside (lo, hi) of a chart segment.
  std::vector<Q> breaks(bool branch, const Q& lo, const Q& hi) const;
  // Interval index and shift of a chart piece lying between two
  // consecutive breakpoints.
  std::pair<int, long> piece(bool branch, long base, const Q& lo, const Q& hi) const;

 private:
  std::vector<Q> real_;
  std::vector<Q> heights_;
  std::vector<BasicInterval> intervals_;
  int real_count_ = 0;
};

BasicPartition basic_intervals(const std::vector<SPoint>& nodes);

// p - k has re in [0,1).
std::pair<SPoint, long> reduce_mod1(const SPoint& p);

}  // namespace sigma
