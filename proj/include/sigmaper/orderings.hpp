#pragma once

#include "sigmaper/periods.hpp"
#include "sigmaper/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace sigma {

// Element of N u {2^inf}.
struct ShValue {
  bool two_inf = false;
  long n = 1;

  static ShValue nat(long n);
  static ShValue inf() { return {true, 0}; }
  std::string str() const;
  static ShValue parse(const std::string& text);
  friend bool operator==(const ShValue& a, const ShValue& b) { return a.two_inf == b.two_inf && a.n == b.n; }
};

// a is below or equal to b in the Sharkovsky ordering (3 is the top, 1 the bottom).
bool sh_le(const ShValue& a, const ShValue& b);
TruncatedPeriodSet sh_tail(const ShValue& s, int n_max);

// Element of N_t: a natural number or the symbol t*2^inf.
struct BaldwinValue {
  bool t_inf = false;
  long n = 1;

  static BaldwinValue nat(long n) { return {false, n}; }
  static BaldwinValue inf() { return {true, 0}; }
};

struct BaldwinOptions {
  // Case (iv) reads k = i*m + j*t; by default i, j >= 1.
  bool allow_zero_coefficients = false;
};

bool in_ntl(long t, const BaldwinValue& v);
bool baldwin_le(long t, const BaldwinValue& k, const BaldwinValue& m, const BaldwinOptions& opt = {});
TruncatedPeriodSet baldwin_tail(long t, const BaldwinValue& m, int n_max, const BaldwinOptions& opt = {});
bool is_tail(long t, const TruncatedPeriodSet& A, const BaldwinOptions& opt = {});
// Decided on the window [1..n_max] of A only.
bool is_union_of_tails(const TruncatedPeriodSet& A, long t_max, const BaldwinOptions& opt = {});

// A real endpoint: an exact rational, or an irrational known to lie in the
// open bracket (lo, hi).
struct RealValue {
  bool irrational = false;
  Q value;
  Q lo, hi;

  static RealValue rational(const Q& q) { return {false, q, q, q}; }
  static RealValue irr(const Q& lo, const Q& hi) { return {true, Q(0), lo, hi}; }
  std::string str() const;
};

TruncatedPeriodSet m_interval(const RealValue& c, const RealValue& d, int n_max);
TruncatedPeriodSet m_interval(const Q& c, const Q& d, int n_max);
TruncatedPeriodSet lambda_set(const RealValue& rho, const std::set<long>& A, int n_max);
TruncatedPeriodSet lambda_set(const RealValue& rho, const TruncatedPeriodSet& A, int n_max);

// Symbolic period sets evaluable on any window.
struct FiniteTerm {
  std::set<long> elems;
};
struct CofiniteTerm {
  long from = 1;
};
struct LambdaTerm {
  RealValue rho;
  ShValue tail;
};
struct MTerm {
  RealValue c, d;
};
struct ScaledTailTerm {
  long q = 1;
  long t = 2;
  BaldwinValue top;
};
using ExprTerm = std::variant<FiniteTerm, CofiniteTerm, LambdaTerm, MTerm, ScaledTailTerm>;

struct PeriodSetExpr {
  std::vector<ExprTerm> terms;

  TruncatedPeriodSet evaluate(int n_max, const BaldwinOptions& opt = {}) const;
  std::string str() const;
};

PeriodSetExpr misiurewicz_expr(const RealValue& c, const RealValue& d, const ShValue& s_c, const ShValue& s_d);
// Syntax: terms joined by '+'; L(p/q; sh(s)), L(irr(a,b); sh(s)), M(c,d),
// F{a,b,c}, C(n), T(t,m), q*T(t,m). Endpoints are rationals or irr(a,b);
// s and m may be 2^inf (t*2^inf is written inf inside T).
PeriodSetExpr parse_expr(const std::string& text);

}  // namespace sigma
