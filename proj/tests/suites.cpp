#include "suites.hpp"

#include "support.hpp"

#include "sigmaper/constructions.hpp"
#include "sigmaper/orderings.hpp"
#include "sigmaper/periods.hpp"
#include "sigmaper/random_map.hpp"
#include "sigmaper/rotation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace suites {

using namespace sigma;

std::string Outcome::summary() const {
  std::ostringstream os;
  os << maps << " maps, " << triggered << " triggered, " << checks << " checks, " << violations.size() << " violations";
  if (incomplete) os << ", search budget exceeded";
  if (!violations.empty()) os << "; first: " << violations.front();
  return os.str();
}

namespace {

constexpr int kWindow = 20;

Enumeration enumerate(const Lifting& F, int max_len) {
  EnumerationOptions opt;
  opt.max_len = max_len;
  opt.budget = 5000000;
  return enumerate_orbits(F, markov_graph(F), opt);
}

// At most `cap` orbits, spread evenly over the enumeration order.
std::vector<LiftedOrbit> sample(const std::vector<LiftedOrbit>& all, std::size_t cap) {
  if (all.size() <= cap) return all;
  std::vector<LiftedOrbit> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(all[i * all.size() / cap]);
  return out;
}

// Orbits in B of period min_len..max_len: node orbits plus walks through
// branch vertices only. The search ends at the first orbit accepted by `stop`.
Enumeration search_branches(const Lifting& F, int min_len, int max_len,
                            const std::function<bool(const LiftedOrbit&)>& stop,
                            std::optional<long> displacement = std::nullopt) {
  auto g = markov_graph(F);
  EnumerationOptions opt;
  opt.min_len = min_len;
  opt.max_len = max_len;
  opt.budget = 5000000;
  opt.vertex_filter = [&g](int v) { return g.vertices[v].branch; };
  opt.stop_when = stop;
  opt.displacement = displacement;
  return enumerate_orbits(F, g, opt);
}

int true_period(const std::function<SPoint(const SPoint&)>& f, const SPoint& x, int limit) {
  SPoint y = x;
  for (int n = 1; n <= limit; ++n) {
    y = f(y);
    if (y == x) return n;
  }
  return 0;
}

std::vector<SPoint> sorted(std::vector<SPoint> v, long shift = 0) {
  for (auto& p : v) p = p.translate(shift);
  std::sort(v.begin(), v.end());
  return v;
}

std::string where(const char* what, std::uint64_t seed) {
  return std::string(what) + " (seed " + std::to_string(seed) + ")";
}

}  // namespace

Outcome theorem_e(int count, std::uint64_t first_seed) {
  Outcome o;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = first_seed + i;
    int d = i % 4 - 1;
    auto F = random_lifting(seed, d);
    ++o.maps;
    std::set<int> ps;
    for (int p = 1; p <= 7; ++p) {
      auto en = search_branches(F, p, p, [p](const LiftedOrbit& P) { return P.lives_in_branches && P.period == p; });
      o.incomplete |= en.incomplete;
      if (en.stopped) ps.insert(p);
    }
    if (ps.empty()) continue;
    ++o.triggered;
    auto per = periods_mod1(F, kWindow);
    for (int p : ps) {
      ++o.checks;
      if (!sh_tail(ShValue::nat(p), kWindow).subset_of(per))
        o.violations.push_back(where("branch orbit of period ", seed) + std::to_string(p) + ", Per = " + format_set(per));
    }
  }
  return o;
}

Outcome theorem_f(int count, std::uint64_t first_seed) {
  Outcome o;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = first_seed + i;
    auto F = random_lifting(seed, 1);
    ++o.maps;
    // Large orbits have rotation 0, so only walks of displacement 0 matter.
    bool hit = false;
    for (int p = 1; p <= 8 && !hit; ++p) {
      auto en = search_branches(
          F, p, p, [](const LiftedOrbit& P) { return P.large && P.lives_in_branches; }, 0L);
      o.incomplete |= en.incomplete;
      hit = en.stopped;
    }
    if (!hit) continue;
    ++o.triggered;
    ++o.checks;
    auto per = periods_mod1(F, kWindow);
    if (per != TruncatedPeriodSet::range(kWindow, 1, kWindow))
      o.violations.push_back(where("large branch orbit", seed) + ", Per = " + format_set(per));
  }
  return o;
}

Outcome theorem_g(int count, std::uint64_t first_seed) {
  Outcome o;
  for (std::uint64_t seed = first_seed; o.triggered < count && seed < first_seed + 100ULL * count; ++seed) {
    auto F = random_lifting(seed, 1);
    ++o.maps;
    auto r = real_rotation_interval(F);
    if (!(r.lo < 0 && 0 < r.hi)) continue;
    ++o.triggered;
    ++o.checks;
    auto per = periods_mod1(F, kWindow);
    auto missing = TruncatedPeriodSet::range(kWindow, 1, kWindow).minus(per);
    bool allowed = theorem_shape(per) != Shape::Other && missing.subset_of(TruncatedPeriodSet::of(kWindow, {1, 2}));
    if (!allowed) o.violations.push_back(where("0 inside Rot", seed) + ", Per = " + format_set(per));
  }
  if (o.triggered < count) o.violations.push_back("only " + std::to_string(o.triggered) + " maps with 0 inside Rot");
  return o;
}

std::vector<Lifting> lemma_fixtures() {
  return {example_5_1(3),
          example_5_1(4),
          example_5_1(5),
          example_5_2(),
          example_6_1(3),
          example_6_1(4),
          example_6_1(3, make_q(-1, 2), true),
          example_6_3(3),
          example_6_3(4),
          example_6_4(),
          theorem_d_fixture().F,
          circle_collapse(testing_support::circle_full()),
          circle_collapse(testing_support::circle_a()),
          circle_collapse(testing_support::circle_b()),
          branch_family(1, ShValue::nat(3)),
          branch_family(0, ShValue::nat(5)),
          branch_family(2, ShValue::nat(6))};
}

namespace {

void check_lifting_identities(const Lifting& F, const std::string& name, Outcome& o) {
  long d = F.degree();
  std::vector<SPoint> xs;
  for (const auto& n : F.nodes()) xs.push_back(n.point);
  for (int i = 1; i < 6; ++i) xs.push_back(testing_support::R(make_q(i, 7)));
  xs.push_back(testing_support::B(0, make_q(2, 5)));
  for (const auto& x : xs) {
    long dn = 1;
    for (long n = 0; n <= 4; ++n, dn *= d) {
      for (long m : {-2L, 3L}) {
        ++o.checks;
        if (F.iterate(x.translate(m), n) != F.iterate(x, n).translate(m * dn))
          o.violations.push_back(name + ": F^n(x+m) != F^n(x)+m d^n at " + x.str());
      }
      if (d == 1)
        for (long k : {-1L, 2L}) {
          ++o.checks;
          if (F.shifted(k).iterate(x, n) != F.iterate(x, n).translate(k * n))
            o.violations.push_back(name + ": (F+k)^n != F^n+kn at " + x.str());
        }
    }
  }
  if (d != 1) return;
  auto r = rotation_interval(F);
  auto per = periods_mod1(F, 12);
  for (long k : {-1L, 2L}) {
    auto G = F.shifted(k);
    auto s = rotation_interval(G);
    ++o.checks;
    if (s.lo != r.lo + k || s.hi != r.hi + k) o.violations.push_back(name + ": Rot(F+k) != Rot(F)+k");
    ++o.checks;
    if (periods_mod1(G, 12) != per) o.violations.push_back(name + ": Per(F+k) != Per(F)");
  }
}

void check_orbits(const Lifting& F, const std::string& name, int max_len, Outcome& o) {
  auto en = enumerate(F, max_len);
  o.incomplete |= en.incomplete;
  auto orbits = sample(en.orbits, 200);
  for (const auto& P : orbits) {
    const SPoint& x = P.representative;
    Q rho = *P.rotation;
    long p = to_long(rho.get_num()), q = to_long(rho.get_den());
    int n = P.period / static_cast<int>(q);
    ++o.checks;
    if (F.iterate(x, P.period) != x.translate(P.shift) || rho * P.period != P.shift)
      o.violations.push_back(name + ": orbit data of " + x.str());

    auto G = [&](const SPoint& y) { return power_shift_eval(F, q, p, y); };
    if (q <= 3) {
      ++o.checks;
      if (true_period(G, x, 20) != n) o.violations.push_back(name + ": G-period of " + x.str());
    }

    if (P.shift == 0) {
      Q lo = re(P.points[0]), hi = lo;
      for (const auto& y : P.points) {
        lo = std::min(lo, re(y));
        hi = std::max(hi, re(y));
      }
      if (hi - lo < 1) {
        ++o.checks;
        if (true_period([&](const SPoint& y) { return F.eval(y); }, x, P.period) != P.period)
          o.violations.push_back(name + ": true period differs from period mod 1 at " + x.str());
      }
    }

    auto b = blocks(F, P, p, q, x);
    ++o.checks;
    bool blocks_ok = b.size() == static_cast<std::size_t>(q);
    for (const auto& blk : b) {
      blocks_ok &= blk.size() == static_cast<std::size_t>(n) && true_period(G, blk[0], n) == n;
      for (const auto& y : blk) blocks_ok &= std::find(blk.begin(), blk.end(), G(y)) != blk.end();
    }
    if (!blocks_ok) {
      o.violations.push_back(name + ": blocks of " + x.str() + " are not G-orbits");
      continue;
    }
    // Another base point gives the same blocks up to relabeling and translation.
    auto bz = blocks(F, P, p, q, P.points[1 % P.points.size()]);
    ++o.checks;
    for (const auto& blk : bz) {
      auto s = sorted(blk);
      bool found = false;
      for (const auto& other : b) {
        long k = floor_long(re(s[0]) - re(sorted(other)[0]));
        for (long dk = -1; dk <= 1 && !found; ++dk) found = sorted(other, k + dk) == s;
      }
      if (!found) o.violations.push_back(name + ": blocks depend on the base point for " + x.str());
    }
    if (q > 1 && !has_increasing_block_structure(b, p)) {
      ++o.triggered;
      long l = reindex_shift(b, p);
      auto Fl = F.shifted(l);
      auto Pl = make_orbit(Fl, x, P.period);
      auto bl = blocks(Fl, Pl, p + l * q, q, x);
      ++o.checks;
      bool same = bl.size() == b.size();
      for (std::size_t i = 0; same && i < b.size(); ++i) same = sorted(bl[i]) == sorted(b[i], static_cast<long>(i) * l);
      if (!same) o.violations.push_back(name + ": shifted blocks are not P_i + i*l for " + x.str());
      ++o.checks;
      if (!has_increasing_block_structure(bl, p + l * q))
        o.violations.push_back(name + ": reindex_shift " + std::to_string(l) + " does not separate blocks of " + x.str());
    }
  }

  // Converse direction: true periodic points of F^q - p are periodic mod 1
  // with rotation p/q and period m*q.
  std::vector<SPoint> candidates;
  for (const auto& n : F.nodes()) candidates.push_back(n.point);
  for (const auto& P : orbits)
    for (const auto& y : P.points) candidates.push_back(y);
  auto r = rotation_interval(F);
  for (long q = 1; q <= 3; ++q)
    for (long p = floor_long(r.lo * q) - 1; p <= ceil_long(r.hi * q) + 1; ++p) {
      if (std::gcd(p, q) != 1) continue;
      auto G = [&](const SPoint& y) { return power_shift_eval(F, q, p, y); };
      for (const auto& x : candidates) {
        int m = true_period(G, x, 6);
        if (m == 0) continue;
        ++o.checks;
        auto pm = period_mod1(F, x, 20);
        if (!pm || pm->first != m * q || pm->second != m * p)
          o.violations.push_back(name + ": G-periodic point " + x.str() + " has the wrong period mod 1");
      }
    }
}

void check_loop_signs(const Lifting& F, const std::string& name, std::mt19937& rng, Outcome& o) {
  auto g = markov_graph(F);
  if (g.edges.empty()) return;
  for (int trial = 0; trial < 20; ++trial) {
    int start = g.edges[rng() % g.edges.size()].from, v = start;
    std::vector<int> walk;
    for (int step = 0; step < 10 && !g.out[v].empty(); ++step) {
      int e = g.out[v][rng() % g.out[v].size()];
      walk.push_back(e);
      v = g.edges[e].to;
      if (v == start) break;
    }
    if (v != start) continue;
    int s = loop_sign(g, walk);
    std::vector<bool> rev(g.vertices.size());
    for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = rng() & 1;
    std::vector<int> rotated(walk.begin() + 1, walk.end());
    rotated.push_back(walk.front());
    ++o.checks;
    if (loop_sign(g, walk, rev) != s || loop_sign(g, rotated) != s)
      o.violations.push_back(name + ": loop sign depends on orientations or the starting edge");
  }
}

}  // namespace

Outcome lemmas(int random_maps, std::uint64_t first_seed) {
  Outcome o;
  std::vector<std::pair<std::string, Lifting>> maps;
  int i = 0;
  for (auto& F : lemma_fixtures()) maps.push_back({"fixture " + std::to_string(i++), F});
  std::size_t fixtures = maps.size();
  const int degrees[] = {1, 1, 1, -1, 2, 0};
  for (int k = 0; k < random_maps; ++k) {
    std::uint64_t seed = first_seed + k;
    maps.push_back({"random seed " + std::to_string(seed), random_lifting(seed, degrees[k % 6], 5)});
  }
  std::mt19937 rng(static_cast<unsigned>(first_seed));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& [name, F] = maps[k];
    ++o.maps;
    check_lifting_identities(F, name, o);
    check_loop_signs(F, name, rng, o);
    if (F.degree() == 1) check_orbits(F, name, k < fixtures ? 5 : 4, o);
  }
  return o;
}

}  // namespace suites
