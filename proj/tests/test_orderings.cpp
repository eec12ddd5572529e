#include "support.hpp"

#include "sigmaper/errors.hpp"
#include "sigmaper/orderings.hpp"

#include <doctest.h>

using namespace sigma;

namespace {

TruncatedPeriodSet set_of(int n, std::set<long> s) { return TruncatedPeriodSet::of(n, s); }
ShValue sh(long n) { return ShValue::nat(n); }
BaldwinValue bw(long n) { return BaldwinValue::nat(n); }

// Position in the Sharkovsky order, larger = higher; an independent encoding
// of 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 2^2*3 > ... > 2^inf > ... > 4 > 2 > 1.
std::pair<int, long> sh_rank(long n) {
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  if (n == 1) return {0, e};    // powers of two, increasing with e
  return {1, -(e * 1000000L + n)};  // odd part > 1: smaller 2-adic order and smaller odd part rank higher
}

bool brute_sh_le(long a, long b) { return sh_rank(a) <= sh_rank(b); }

}  // namespace

TEST_CASE("Sharkovsky comparisons") {
  CHECK(sh_le(sh(5), sh(3)));
  CHECK_FALSE(sh_le(sh(3), sh(5)));
  for (long k = 0; k < 20; ++k) CHECK(sh_le(sh(1L << k), ShValue::inf()));
  CHECK_FALSE(sh_le(ShValue::inf(), sh(1L << 20)));
  CHECK(sh_le(ShValue::inf(), sh(12)));
  for (long x = 1; x <= 40; ++x) CHECK(sh_le(sh(1), sh(x)));
  CHECK(sh_le(sh(1), ShValue::inf()));
  for (long a = 1; a <= 64; ++a)
    for (long b = 1; b <= 64; ++b) CHECK_MESSAGE(sh_le(sh(a), sh(b)) == brute_sh_le(a, b), a << " vs " << b);
}

TEST_CASE("Sharkovsky tails") {
  CHECK(sh_tail(sh(3), 6) == TruncatedPeriodSet::range(6, 1, 6));
  CHECK(sh_tail(ShValue::inf(), 10) == set_of(10, {1, 2, 4, 8}));
  CHECK(sh_tail(sh(6), 10) == set_of(10, {1, 2, 4, 6, 8, 10}));
  CHECK(sh_tail(sh(5), 10) == set_of(10, {1, 2, 4, 5, 6, 7, 8, 9, 10}));
  CHECK(sh_tail(sh(4), 20) == set_of(20, {1, 2, 4}));
  CHECK(ShValue::parse("2^inf") == ShValue::inf());
  CHECK(ShValue::parse("12") == sh(12));
}

TEST_CASE("Baldwin comparisons") {
  CHECK(baldwin_le(3, bw(7), bw(4)));
  CHECK(baldwin_le(3, bw(6), bw(4)));
  CHECK_FALSE(baldwin_le(3, bw(8), bw(4)));
  CHECK(baldwin_le(3, bw(8), bw(4), BaldwinOptions{true}));
  try {
    baldwin_le(3, bw(2), bw(4));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInDomain);
  }
  CHECK(in_ntl(3, bw(6)));
  CHECK_FALSE(in_ntl(3, bw(4)));
  CHECK(in_ntl(3, BaldwinValue::inf()));
}

TEST_CASE("Baldwin order 2 is the Sharkovsky order") {
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= 40; ++b) CHECK(baldwin_le(2, bw(a), bw(b)) == sh_le(sh(a), sh(b)));
  CHECK(baldwin_tail(2, bw(6), 10) == sh_tail(sh(6), 10));
  CHECK(baldwin_tail(2, BaldwinValue::inf(), 20) == sh_tail(ShValue::inf(), 20));
}

TEST_CASE("Baldwin tails") {
  for (long t = 2; t <= 6; ++t) {
    CHECK(is_tail(t, set_of(20, {1})));
    for (long m = 1; m <= 20; ++m) {
      if (m > 1 && m < t) continue;
      auto T = baldwin_tail(t, bw(m), 20);
      CHECK(T.contains(1));
      CHECK(T.contains(m));
      CHECK(is_tail(t, T));
      CHECK(is_union_of_tails(T, 6));
    }
  }
  CHECK(is_tail(3, set_of(20, {1, 3, 6, 12})));
  CHECK_FALSE(is_tail(3, set_of(20, {1, 4})));
  CHECK(baldwin_tail(3, bw(4), 20) == set_of(20, {1, 3, 4, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20}));
  CHECK_FALSE(is_union_of_tails(set_of(20, {5}), 6));
}

TEST_CASE("M sets") {
  CHECK(m_interval(Q(1), Q(1), 20).empty());
  CHECK(m_interval(Q(0), make_q(1, 2), 10) == TruncatedPeriodSet::range(10, 3, 10));
  CHECK(m_interval(make_q(-1, 3), make_q(1, 3), 6) == TruncatedPeriodSet::range(6, 1, 6));
  // Brute force over k.
  for (int a = -6; a <= 6; ++a)
    for (int b = a; b <= 6; ++b) {
      Q c = make_q(a, 4), d = make_q(b, 5);
      if (c > d) continue;
      auto M = m_interval(c, d, 15);
      for (long n = 1; n <= 15; ++n) {
        bool any = false;
        for (long k = -10 * n; k <= 10 * n; ++k) any |= (c < Q(k, n) && Q(k, n) < d);
        CHECK(M.contains(n) == any);
      }
    }
  // No k/n with n <= 5 lies in (2/5, 1/2).
  CHECK(m_interval(RealValue::irr(make_q(2, 5), make_q(1, 2)), RealValue::rational(Q(1)), 5).contains(2));
  CHECK_THROWS_AS(m_interval(RealValue::irr(make_q(1, 3), make_q(1, 2)), RealValue::rational(Q(1)), 5), Error);
  // Monotone in the window.
  CHECK(m_interval(Q(0), make_q(1, 7), 10).subset_of(m_interval(Q(0), make_q(1, 7), 20).restricted(10)));
}

TEST_CASE("Lambda sets") {
  auto half = RealValue::rational(make_q(1, 2));
  CHECK(lambda_set(half, std::set<long>{1, 2, 3}, 10) == set_of(10, {2, 4, 6}));
  CHECK(lambda_set(RealValue::rational(make_q(2, 4)), std::set<long>{1}, 10) == set_of(10, {2}));
  CHECK(lambda_set(RealValue::irr(Q(0), Q(1)), std::set<long>{1, 2, 3}, 10).empty());
  CHECK(lambda_set(RealValue::rational(Q(0)), sh_tail(sh(3), 12), 12) == TruncatedPeriodSet::range(12, 1, 12));
}

TEST_CASE("Misiurewicz expressions") {
  auto zero = RealValue::rational(Q(0));
  CHECK(misiurewicz_expr(zero, zero, sh(3), sh(3)).evaluate(20) == TruncatedPeriodSet::range(20, 1, 20));
  CHECK(misiurewicz_expr(zero, RealValue::rational(make_q(1, 2)), sh(1), sh(1)).evaluate(20) ==
        TruncatedPeriodSet::range(20, 1, 20));
  // An irrational left endpoint drops the first term.
  // The bracket holds no k/n with n <= 20.
  auto c = RealValue::irr(make_q(1, 4), make_q(251, 1000));
  auto e = misiurewicz_expr(c, RealValue::rational(make_q(1, 2)), sh(3), sh(1));
  CHECK(e.evaluate(20) == m_interval(c, RealValue::rational(make_q(1, 2)), 20).united(set_of(20, {2})));
}

TEST_CASE("expression syntax") {
  auto e = parse_expr("M(0,1/2) + L(1/2; sh(3))");
  CHECK(e.evaluate(20) == TruncatedPeriodSet::range(20, 2, 20));
  CHECK(parse_expr("F{1,5} + C(18)").evaluate(20) == set_of(20, {1, 5, 18, 19, 20}));
  CHECK(parse_expr("T(3,4)").evaluate(20) == baldwin_tail(3, bw(4), 20));
  CHECK(parse_expr("2*T(2,3)").evaluate(10) == set_of(10, {2, 4, 6, 8, 10}));
  CHECK(parse_expr("L(irr(0,1); sh(3))").evaluate(10).empty());
  CHECK(parse_expr("L(0; sh(2^inf))").evaluate(10) == set_of(10, {1, 2, 4, 8}));
  CHECK(parse_expr(parse_expr("M(0,1/2) + F{1}").str()).evaluate(20) == parse_expr("M(0,1/2) + F{1}").evaluate(20));
  CHECK_THROWS_AS(parse_expr("M(0,"), Error);
  CHECK_THROWS_AS(parse_expr("Q(1)"), Error);
}
