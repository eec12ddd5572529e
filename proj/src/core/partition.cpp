#include "sigmaper/partition.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>

namespace sigma {

SPoint BasicInterval::at(const Q& param) const {
  return branch ? SPoint::branch(base, param) : SPoint::real(param);
}

std::pair<SPoint, long> reduce_mod1(const SPoint& p) {
  long k = p.is_branch() ? p.base() : floor_long(p.x());
  return {p.translate(-k), k};
}

BasicPartition::BasicPartition(const std::vector<SPoint>& nodes) {
  real_.push_back(Q(0));
  heights_.push_back(Q(1));
  for (const auto& p : nodes) {
    if (p.is_real()) {
      if (p.x() < 0 || p.x() >= 1)
        throw Error(ErrorCode::BadPartition, "node " + p.str() + " outside the fundamental domain");
      real_.push_back(p.x());
    } else {
      if (p.base() != 0)
        throw Error(ErrorCode::BadPartition, "node " + p.str() + " outside the fundamental domain");
      heights_.push_back(p.height());
    }
  }
  std::sort(real_.begin(), real_.end());
  real_.erase(std::unique(real_.begin(), real_.end()), real_.end());
  std::sort(heights_.begin(), heights_.end());
  heights_.erase(std::unique(heights_.begin(), heights_.end()), heights_.end());

  real_count_ = static_cast<int>(real_.size());
  for (std::size_t i = 0; i < real_.size(); ++i) {
    BasicInterval I;
    I.branch = false;
    I.lo = real_[i];
    I.hi = i + 1 < real_.size() ? real_[i + 1] : Q(1);
    I.name = "A_" + std::to_string(i + 1);
    intervals_.push_back(I);
  }
  for (std::size_t j = 0; j < heights_.size(); ++j) {
    BasicInterval I;
    I.branch = true;
    I.base = 0;
    I.lo = j == 0 ? Q(0) : heights_[j - 1];
    I.hi = heights_[j];
    I.name = heights_.size() == 1 ? "B_0" : "B_0_" + std::to_string(j + 1);
    intervals_.push_back(I);
  }
}

BasicPartition basic_intervals(const std::vector<SPoint>& nodes) { return BasicPartition(nodes); }

bool BasicPartition::is_node(const SPoint& p) const {
  auto [p0, k] = reduce_mod1(p);
  (void)k;
  if (p0.is_real()) return std::binary_search(real_.begin(), real_.end(), p0.x());
  return std::binary_search(heights_.begin(), heights_.end(), p0.height());
}

BasicPartition::Location BasicPartition::locate(const SPoint& p) const {
  auto [p0, k] = reduce_mod1(p);
  if (p0.is_real()) {
    const Q& x = p0.x();
    auto it = std::upper_bound(real_.begin(), real_.end(), x);
    int idx = static_cast<int>(it - real_.begin()) - 1;
    return {idx, k, x};
  }
  const Q& h = p0.height();
  auto it = std::upper_bound(heights_.begin(), heights_.end(), h);
  int j = static_cast<int>(it - heights_.begin());
  if (j >= static_cast<int>(heights_.size())) j = static_cast<int>(heights_.size()) - 1;
  return {real_count_ + j, k, h};
}

std::vector<Q> BasicPartition::breaks(bool branch, const Q& lo, const Q& hi) const {
  std::vector<Q> out;
  if (branch) {
    for (const auto& h : heights_)
      if (lo < h && h < hi) out.push_back(h);
    return out;
  }
  long first = floor_long(lo), last = floor_long(hi);
  for (long n = first; n <= last; ++n)
    for (const auto& r : real_) {
      Q v = r + n;
      if (lo < v && v < hi) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, long> BasicPartition::piece(bool branch, long base, const Q& lo, const Q& hi) const {
  if (branch) {
    for (int j = 0; j < static_cast<int>(heights_.size()); ++j) {
      const auto& I = intervals_[real_count_ + j];
      if (I.lo == lo && I.hi == hi) return {real_count_ + j, base};
    }
  } else {
    long k = floor_long(lo);
    Q x = lo - k;
    for (int i = 0; i < real_count_; ++i) {
      const auto& I = intervals_[i];
      if (I.lo == x && I.hi == hi - k) return {i, k};
    }
  }
  throw Error(ErrorCode::Internal, "chart piece does not match a basic interval");
}

}  // namespace sigma
