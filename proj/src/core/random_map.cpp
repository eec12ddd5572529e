#include "sigmaper/random_map.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sigma {

Lifting random_lifting(std::uint64_t seed, int degree, int max_nodes) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long n) { return static_cast<long>(rng() % static_cast<std::uint64_t>(n)); };
  int total = 2 + static_cast<int>(pick(std::max(1, max_nodes - 1)));
  int reals = 1 + static_cast<int>(pick(total - 1));
  int heights = total - reals;  // includes the tip

  const long den = 24;
  std::set<Q> xs{Q(0)}, hs{Q(1)};
  while (static_cast<int>(xs.size()) < reals) xs.insert(make_q(1 + pick(den - 1), den));
  while (static_cast<int>(hs.size()) < heights) hs.insert(make_q(1 + pick(den - 1), den));

  std::vector<SPoint> nodes;
  for (const auto& x : xs) nodes.push_back(SPoint::real(x));
  for (const auto& h : hs) nodes.push_back(SPoint::branch(0, h));
  std::vector<std::pair<SPoint, SPoint>> pairs;
  for (const auto& p : nodes) {
    const SPoint& target = nodes[pick(static_cast<long>(nodes.size()))];
    pairs.push_back({p, target.translate(pick(5) - 2)});
  }
  return build_lifting(degree, pairs);
}

}  // namespace sigma
