#pragma once

#include "sigmaper/partition.hpp"
#include "sigmaper/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sigma {

struct NodeSpec {
  std::string name;
  SPoint point;
  SPoint image;
  // Set by the parser when the node was written as B(0,0); such a node must
  // agree with Real(0).
  bool written_as_base = false;
  int line = 0;
};

// Piecewise affine lifting F of degree d, Markov on its node set.
class Lifting {
 public:
  Lifting() = default;

  int degree() const { return degree_; }
  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const BasicPartition& partition() const { return partition_; }

  // Node index of a fundamental-domain point, if it is a node.
  std::optional<std::size_t> node_index(const SPoint& p0) const;
  const SPoint& image_at_node(const SPoint& p0) const;

  // Images of the endpoints of basic interval v.
  const SPoint& image_lo(int v) const { return img_lo_[v]; }
  const SPoint& image_hi(int v) const { return img_hi_[v]; }

  SPoint eval(const SPoint& p) const;
  SPoint iterate(const SPoint& p, long n) const;

  // F + k as a lifting.
  Lifting shifted(long k) const;

  friend Lifting build_lifting(int degree, std::vector<NodeSpec> specs);

 private:
  int degree_ = 1;
  std::vector<NodeSpec> nodes_;
  BasicPartition partition_;
  std::vector<SPoint> img_lo_, img_hi_;
};

Lifting build_lifting(int degree, std::vector<NodeSpec> specs);
Lifting build_lifting(int degree, const std::vector<std::pair<SPoint, SPoint>>& pairs);

SPoint eval(const Lifting& F, const SPoint& p);
SPoint iterate(const Lifting& F, const SPoint& p, long n);

// Maps derived from a lifting: F + k, F^q - p and F_0.
class DerivedMap {
 public:
  enum class Form { Plain, Shifted, PowerShifted, FZero };

  DerivedMap(const Lifting& base, Form form, long a = 0, long b = 0);
  const Lifting& base() const { return *base_; }
  Form form() const { return form_; }

  SPoint eval(const SPoint& p) const;
  SPoint iterate(const SPoint& p, long n) const;

 private:
  const Lifting* base_;
  Form form_;
  long a_, b_;
};

DerivedMap shift_lifting(const Lifting& F, long k);
DerivedMap power_shift(const Lifting& F, long q, long p);
SPoint power_shift_eval(const Lifting& F, long q, long p, const SPoint& x);
SPoint f0(const Lifting& F, const SPoint& p);
// (Re F^n(p) - Re p) / n.
Q rho_estimate(const Lifting& F, const SPoint& p, long n);

}  // namespace sigma
