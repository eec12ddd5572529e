#pragma once

#include "sigmaper/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sigma {

// A point of S = R u B. Branch(m, 0) is stored as Real(m).
class SPoint {
 public:
  SPoint() = default;
  static SPoint real(const Q& x);
  static SPoint branch(long base, const Q& height);

  bool is_real() const { return !branch_; }
  bool is_branch() const { return branch_; }
  const Q& x() const;
  long base() const;
  const Q& height() const;

  Q re() const;
  SPoint translate(long k) const;
  // In B means on some branch, base points included.
  bool in_B() const;

  std::string str() const;
  static SPoint parse(std::string_view text);

  friend bool operator==(const SPoint& a, const SPoint& b);
  friend bool operator!=(const SPoint& a, const SPoint& b) { return !(a == b); }
  friend bool operator<(const SPoint& a, const SPoint& b);

 private:
  bool branch_ = false;
  long base_ = 0;
  Q v_;
};

Q re(const SPoint& p);
Q dist(const SPoint& p, const SPoint& q);

// Piece of an arc inside one chart: a real segment or a segment of B_base
// measured by height. Traversed from `from` to `to`.
struct Segment {
  bool branch = false;
  long base = 0;
  Q from, to;

  Q length() const;
  SPoint start() const;
  SPoint end() const;
  SPoint at_offset(const Q& s) const;
  bool forward() const { return to > from; }
};

// The unique arc chull{a, b}.
class SInterval {
 public:
  SInterval() = default;
  SInterval(const SPoint& a, const SPoint& b) : a_(a), b_(b) {}

  const SPoint& a() const { return a_; }
  const SPoint& b() const { return b_; }

  // At most three nonempty chart segments: stub at a, real part, stub at b.
  std::vector<Segment> segments() const;
  Q length() const;
  SPoint at(const Q& s) const;
  bool contains(const SPoint& p) const;
  Q offset_of(const SPoint& p) const;
  std::string str() const;

 private:
  SPoint a_, b_;
};

SInterval hull(const SPoint& p, const SPoint& q);
bool interior_contains_branchpoint(const SInterval& I);
SPoint retract_to(const SInterval& I, const SPoint& p);

struct OrderedInterval {
  SInterval interval;
  bool reversed = false;

  OrderedInterval flipped() const { return {interval, !reversed}; }
  const SPoint& min() const { return reversed ? interval.b() : interval.a(); }
  const SPoint& max() const { return reversed ? interval.a() : interval.b(); }
  // x <_I y along the chosen orientation.
  bool less(const SPoint& x, const SPoint& y) const;
};

}  // namespace sigma
