#include "support.hpp"

#include "sigmaper/space.hpp"

#include <doctest.h>

#include <random>

using namespace sigma;
using testing_support::B;
using testing_support::R;

TEST_CASE("re") {
  CHECK(re(B(2, make_q(1, 3))) == 2);
  CHECK(re(R(make_q(7, 2))) == make_q(7, 2));
  CHECK(re(B(-1, 1)) == -1);
}

TEST_CASE("branch of height zero is its base") {
  CHECK(B(3, 0) == R(3));
  CHECK(B(3, 0).is_real());
  CHECK(SPoint::parse("B(3,0)") == R(3));
}

TEST_CASE("point syntax round-trips") {
  for (const char* s : {"R(0)", "R(-7/3)", "B(0,1)", "B(-2,1/5)", "R(5)"}) CHECK(SPoint::parse(s).str() == s);
  CHECK(SPoint::parse("R(2/4)").str() == "R(1/2)");
}

TEST_CASE("dist") {
  CHECK(dist(R(0), R(make_q(3, 2))) == make_q(3, 2));
  CHECK(dist(B(0, make_q(1, 2)), B(0, make_q(1, 4))) == make_q(1, 4));
  CHECK(dist(B(0, make_q(1, 2)), B(1, make_q(1, 3))) == make_q(11, 6));
}

TEST_CASE("hull decomposition") {
  auto segs = hull(R(make_q(1, 4)), R(make_q(3, 4))).segments();
  REQUIRE(segs.size() == 1);
  CHECK_FALSE(segs[0].branch);
  CHECK(hull(R(make_q(1, 4)), R(make_q(3, 4))).length() == make_q(1, 2));

  auto h = hull(B(0, make_q(1, 2)), R(make_q(1, 2)));
  segs = h.segments();
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].branch);
  CHECK(segs[0].from == make_q(1, 2));
  CHECK(segs[0].to == 0);
  CHECK(segs[1].to == make_q(1, 2));

  CHECK(hull(B(0, 1), B(1, 1)).segments().size() == 3);
  CHECK(hull(B(0, 1), B(1, 1)).length() == 3);
}

TEST_CASE("interior_contains_branchpoint") {
  CHECK(interior_contains_branchpoint(hull(B(0, make_q(1, 2)), R(make_q(1, 2)))));
  CHECK_FALSE(interior_contains_branchpoint(hull(R(0), R(1))));
  CHECK(interior_contains_branchpoint(hull(R(make_q(-1, 4)), R(make_q(1, 4)))));
}

TEST_CASE("retract_to") {
  SInterval I(R(0), R(1));
  CHECK(retract_to(I, B(0, make_q(1, 2))) == R(0));
  CHECK(retract_to(I, R(make_q(3, 2))) == R(1));
  CHECK(retract_to(I, R(make_q(1, 3))) == R(make_q(1, 3)));
}

namespace {
SPoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> base(-3, 3), num(0, 12), kind(0, 1);
  Q v = make_q(num(rng), 12);
  return kind(rng) ? B(base(rng), v) : R(base(rng) + v);
}
}  // namespace

TEST_CASE("metric properties on random points") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_point(rng), q = random_point(rng), z = random_point(rng);
    long k = static_cast<long>(rng() % 7) - 3;
    CHECK(dist(p, q) == dist(q, p));
    CHECK(dist(p.translate(k), q.translate(k)) == dist(p, q));
    auto h = hull(p, q);
    CHECK(h.contains(p));
    CHECK(h.contains(q));
    CHECK(h.length() == dist(p, q));
    // A point of the hull splits the distance.
    auto mid = h.at(h.length() / 3);
    CHECK(h.contains(mid));
    CHECK(dist(p, mid) + dist(mid, q) == dist(p, q));
    if (h.contains(z)) CHECK(dist(p, z) + dist(z, q) == dist(p, q));
    // Retraction: idempotent, lands in the hull, does not increase distances to the hull.
    auto r = retract_to(h, z);
    CHECK(h.contains(r));
    CHECK(retract_to(h, r) == r);
    CHECK(dist(r, p) <= dist(z, p));
    CHECK(dist(z, r) + dist(r, q) == dist(z, q));
  }
}

TEST_CASE("ordered interval orientation") {
  OrderedInterval I{SInterval(R(0), B(0, 1)), false};
  CHECK(I.less(R(0), B(0, make_q(1, 2))));
  CHECK_FALSE(I.flipped().less(R(0), B(0, make_q(1, 2))));
  CHECK(I.flipped().flipped().reversed == I.reversed);
  CHECK(I.flipped().min() == B(0, 1));
}
