#include "sigmaper/errors.hpp"
#include "sigmaper/periods.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sigma {

std::vector<std::vector<SPoint>> blocks(const Lifting& F, const LiftedOrbit& P, long p, long q, const SPoint& x) {
  if (q < 1 || std::gcd(p < 0 ? -p : p, q) != 1)
    throw Error(ErrorCode::BadRotationData, "p/q must be in lowest terms with q >= 1");
  if (P.period % q != 0 || Q(P.shift) * q != Q(p) * P.period)
    throw Error(ErrorCode::BadRotationData, "orbit of period " + std::to_string(P.period) + " and shift " +
                                                std::to_string(P.shift) + " does not have rotation " +
                                                std::to_string(p) + "/" + std::to_string(q));
  auto x0 = reduce_mod1(x).first;
  if (!std::binary_search(P.reduced.begin(), P.reduced.end(), x0))
    throw Error(ErrorCode::BadRotationData, x.str() + " is not a point of the orbit");
  long n = P.period / q;
  std::vector<std::vector<SPoint>> out;
  SPoint y = x;
  for (long i = 0; i < q; ++i) {
    std::vector<SPoint> blk;
    SPoint z = y;
    for (long s = 0; s < n; ++s) {
      blk.push_back(z);
      z = power_shift_eval(F, q, p, z);
    }
    if (z != y) throw Error(ErrorCode::Internal, "block is not G-periodic");
    std::sort(blk.begin(), blk.end());
    out.push_back(blk);
    y = F.eval(y);
  }
  return out;
}

namespace {

Q min_re(const std::vector<SPoint>& b) {
  Q m = b.at(0).re();
  for (const auto& x : b) m = std::min(m, x.re());
  return m;
}

Q max_re(const std::vector<SPoint>& b) {
  Q m = b.at(0).re();
  for (const auto& x : b) m = std::max(m, x.re());
  return m;
}

}  // namespace

bool has_increasing_block_structure(const std::vector<std::vector<SPoint>>& B, long p) {
  std::size_t q = B.size();
  if (q <= 1) return true;
  for (std::size_t i = 0; i < q; ++i) {
    Q next_min = i + 1 < q ? min_re(B[i + 1]) : min_re(B[0]) + p;
    if (!(max_re(B[i]) < next_min)) return false;
  }
  return true;
}

long reindex_shift(const std::vector<std::vector<SPoint>>& B, long p) {
  std::size_t q = B.size();
  if (q <= 1) return 0;
  Q worst;
  for (std::size_t i = 0; i < q; ++i) {
    Q next_min = i + 1 < q ? min_re(B[i + 1]) : min_re(B[0]) + p;
    Q gap = max_re(B[i]) - next_min;
    if (i == 0 || gap > worst) worst = gap;
  }
  return floor_long(worst) + 1;
}

std::set<int> orbit_type_3star(const std::function<SPoint(const SPoint&)>& map, const std::vector<SPoint>& orbit,
                               std::optional<long> center) {
  if (orbit.empty()) throw Error(ErrorCode::NotAStarOrbit, "empty orbit");
  if (!center) {
    std::set<long> bases;
    for (const auto& x : orbit)
      if (x.is_branch()) bases.insert(x.base());
    if (bases.size() != 1) throw Error(ErrorCode::NotAStarOrbit, "cannot identify a unique branching point");
    center = *bases.begin();
  }
  long m = *center;
  // Legs: 0 = left, 1 = right, 2 = up; -1 for the center itself.
  auto leg = [&](const SPoint& x) -> int {
    if (x.is_branch()) {
      if (x.base() != m) throw Error(ErrorCode::NotAStarOrbit, x.str() + " lies off the star at " + std::to_string(m));
      return 2;
    }
    if (x.x() == m) return -1;
    return x.x() < m ? 0 : 1;
  };
  std::map<int, SPoint> closest;
  bool center_in = false;
  for (const auto& x : orbit) {
    int l = leg(x);
    if (l < 0) {
      center_in = true;
      continue;
    }
    auto it = closest.find(l);
    Q d = dist(x, SPoint::real(Q(m)));
    if (it == closest.end() || d < dist(it->second, SPoint::real(Q(m)))) closest[l] = x;
  }
  if (closest.size() != 3) throw Error(ErrorCode::NotAStarOrbit, "the orbit does not occupy all three legs");
  if (center_in) return {1};
  std::map<int, int> phi;
  for (auto& [l, z] : closest) {
    int t = leg(map(z));
    if (t < 0 || !closest.count(t)) throw Error(ErrorCode::NotAStarOrbit, "orbit image leaves the occupied legs");
    phi[l] = t;
  }
  std::set<int> types;
  for (auto& [l, t] : phi) {
    // l is periodic under phi when it returns within three steps.
    int y = l;
    for (int n = 1; n <= 3; ++n) {
      y = phi[y];
      if (y == l) {
        types.insert(n);
        break;
      }
    }
  }
  return types;
}

}  // namespace sigma
