#include "sigmaper/orderings.hpp"

#include "sigmaper/errors.hpp"

#include <numeric>
#include <tuple>

namespace sigma {

ShValue ShValue::nat(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Sharkovsky values start at 1");
  return {false, n};
}

std::string ShValue::str() const { return two_inf ? "2^inf" : std::to_string(n); }

ShValue ShValue::parse(const std::string& text) {
  if (text == "2^inf" || text == "inf") return inf();
  return nat(to_long(parse_q(text).get_num()));
}

namespace {

// Smaller key = lower in the ordering.
std::tuple<int, long, long> sh_key(const ShValue& v) {
  if (v.two_inf) return {1, 0, 0};
  long n = v.n, e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  if (n == 1) return {0, e, 0};
  return {2, -e, -n};
}

}  // namespace

bool sh_le(const ShValue& a, const ShValue& b) { return sh_key(a) <= sh_key(b); }

TruncatedPeriodSet sh_tail(const ShValue& s, int n_max) {
  TruncatedPeriodSet r(n_max);
  for (long k = 1; k <= n_max; ++k)
    if (sh_le(ShValue::nat(k), s)) r.insert(k);
  return r;
}

bool in_ntl(long t, const BaldwinValue& v) { return v.t_inf || v.n == 1 || v.n % t == 0; }

namespace {

void check_domain(long t, const BaldwinValue& v) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "Baldwin orderings need t >= 2");
  if (!v.t_inf && (v.n < 1 || (v.n >= 2 && v.n <= t - 1)))
    throw Error(ErrorCode::NotInDomain, std::to_string(v.n) + " is not in N_" + std::to_string(t));
}

}  // namespace

bool baldwin_le(long t, const BaldwinValue& k, const BaldwinValue& m, const BaldwinOptions& opt) {
  check_domain(t, k);
  check_domain(t, m);
  bool same = k.t_inf == m.t_inf && (k.t_inf || k.n == m.n);
  if ((!k.t_inf && k.n == 1) || same) return true;
  bool kn = in_ntl(t, k), mn = in_ntl(t, m);
  if (kn && mn) {
    if (!m.t_inf && m.n == 1) return false;
    auto over_t = [&](const BaldwinValue& v) { return v.t_inf ? ShValue::inf() : ShValue::nat(v.n / t); };
    return sh_le(over_t(k), over_t(m));
  }
  if (kn && !mn) return true;
  if (!kn && mn) return false;
  // k = i*m + j*t.
  long lo = opt.allow_zero_coefficients ? 0 : 1;
  for (long i = lo; i * m.n <= k.n; ++i) {
    long rest = k.n - i * m.n;
    if (rest % t == 0 && rest / t >= lo) return true;
  }
  return false;
}

TruncatedPeriodSet baldwin_tail(long t, const BaldwinValue& m, int n_max, const BaldwinOptions& opt) {
  check_domain(t, m);
  TruncatedPeriodSet r(n_max);
  for (long k = 1; k <= n_max; ++k) {
    if (k >= 2 && k <= t - 1) continue;
    if (baldwin_le(t, BaldwinValue::nat(k), m, opt)) r.insert(k);
  }
  return r;
}

bool is_tail(long t, const TruncatedPeriodSet& A, const BaldwinOptions& opt) {
  if (A.empty()) return false;
  for (long m : A.elements()) {
    if (m >= 2 && m <= t - 1) return false;
    if (!baldwin_tail(t, BaldwinValue::nat(m), A.n_max(), opt).subset_of(A)) return false;
  }
  return true;
}

bool is_union_of_tails(const TruncatedPeriodSet& A, long t_max, const BaldwinOptions& opt) {
  if (A.empty()) return false;
  for (long a : A.elements()) {
    bool covered = false;
    for (long t = 2; t <= t_max && !covered; ++t) {
      if (a >= 2 && a <= t - 1) continue;
      covered = baldwin_tail(t, BaldwinValue::nat(a), A.n_max(), opt).subset_of(A);
    }
    if (!covered) return false;
  }
  return true;
}

std::string RealValue::str() const {
  if (irrational) return "irr(" + to_string(lo) + "," + to_string(hi) + ")";
  return to_string(value);
}

namespace {

// floor(v * n); for an irrational v the bracket must decide it.
long floor_times(const RealValue& v, long n) {
  if (!v.irrational) return floor_long(v.value * n);
  long a = floor_long(v.lo * n);
  Q top = v.hi * n;
  // v*n lies in (lo*n, hi*n) and is never an integer.
  if (Q(a + 1) < top)
    throw Error(ErrorCode::InvalidArgument,
                "bracket " + v.str() + " is too wide to decide multiples by " + std::to_string(n));
  return a;
}

}  // namespace

TruncatedPeriodSet m_interval(const RealValue& c, const RealValue& d, int n_max) {
  TruncatedPeriodSet r(n_max);
  for (long n = 1; n <= n_max; ++n) {
    // Smallest k with k > c*n; then test k < d*n.
    long k = floor_times(c, n) + 1;
    bool ok;
    if (!d.irrational) {
      ok = Q(k) < d.value * n;
    } else {
      long f = floor_times(d, n);
      ok = k <= f;
    }
    if (ok) r.insert(n);
  }
  return r;
}

TruncatedPeriodSet m_interval(const Q& c, const Q& d, int n_max) {
  if (c > d) throw Error(ErrorCode::InvalidArgument, "M(c,d) needs c <= d");
  return m_interval(RealValue::rational(c), RealValue::rational(d), n_max);
}

TruncatedPeriodSet lambda_set(const RealValue& rho, const std::set<long>& A, int n_max) {
  TruncatedPeriodSet r(n_max);
  if (rho.irrational) return r;
  long n = to_long(rho.value.get_den());
  for (long q : A)
    if (q >= 1) r.insert(n * q);
  return r;
}

TruncatedPeriodSet lambda_set(const RealValue& rho, const TruncatedPeriodSet& A, int n_max) {
  auto e = A.elements();
  return lambda_set(rho, std::set<long>(e.begin(), e.end()), n_max);
}

TruncatedPeriodSet PeriodSetExpr::evaluate(int n_max, const BaldwinOptions& opt) const {
  TruncatedPeriodSet r(n_max);
  for (const auto& term : terms) {
    TruncatedPeriodSet part(n_max);
    if (auto* f = std::get_if<FiniteTerm>(&term)) {
      part = TruncatedPeriodSet::of(n_max, f->elems);
    } else if (auto* c = std::get_if<CofiniteTerm>(&term)) {
      part = TruncatedPeriodSet::range(n_max, c->from, n_max);
    } else if (auto* l = std::get_if<LambdaTerm>(&term)) {
      part = lambda_set(l->rho, sh_tail(l->tail, n_max), n_max);
    } else if (auto* m = std::get_if<MTerm>(&term)) {
      part = m_interval(m->c, m->d, n_max);
    } else if (auto* s = std::get_if<ScaledTailTerm>(&term)) {
      for (long k : baldwin_tail(s->t, s->top, n_max, opt).elements()) part.insert(s->q * k);
    }
    r = r.united(part);
  }
  return r;
}

PeriodSetExpr misiurewicz_expr(const RealValue& c, const RealValue& d, const ShValue& s_c, const ShValue& s_d) {
  PeriodSetExpr e;
  e.terms.push_back(LambdaTerm{c, s_c});
  e.terms.push_back(MTerm{c, d});
  e.terms.push_back(LambdaTerm{d, s_d});
  return e;
}

}  // namespace sigma
