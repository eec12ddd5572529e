#include "sigmaper/verify.hpp"

#include "sigmaper/constructions.hpp"
#include "sigmaper/errors.hpp"
#include "sigmaper/orderings.hpp"
#include "sigmaper/periods.hpp"
#include "sigmaper/rotation.hpp"

namespace sigma {

namespace {

std::string interval_str(const Q& lo, const Q& hi) { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }

Claim rot_claim(const std::string& label, const Lifting& F, const Q& lo, const Q& hi) {
  auto R = rotation_interval(F);
  return {label + " rot = " + interval_str(lo, hi), R.lo == lo && R.hi == hi, "got " + interval_str(R.lo, R.hi)};
}

Claim set_claim(const std::string& label, const TruncatedPeriodSet& got, const TruncatedPeriodSet& want) {
  return {label + " = " + format_set(want), got == want, "got " + format_set(got)};
}

bool has_node_period(const Lifting& F, int n) {
  for (const auto& P : node_orbit_periods(F))
    if (P.period == n) return true;
  return false;
}

}  // namespace

std::vector<std::string> example_ids() { return {"5_1", "5_2", "6_1", "6_3", "6_4"}; }

std::vector<Claim> verify_example(const std::string& id, const VerifyOptions& opt) {
  int N = opt.n_max;
  std::vector<Claim> out;
  if (id == "5_1") {
    for (int n = 3; n <= 5; ++n) {
      auto F = example_5_1(n);
      std::string l = "ex5.1 n=" + std::to_string(n);
      out.push_back(rot_claim(l, F, Q(-1) / (n - 1), make_q(1, 2)));
      out.push_back(set_claim(l + " periods", periods_mod1(F, N), TruncatedPeriodSet::range(N, 2, N)));
      EnumerationOptions eo;
      eo.max_len = n;
      eo.budget = opt.budget;
      auto en = enumerate_orbits(F, markov_graph(F), eo);
      bool large = false;
      for (const auto& P : en.orbits)
        if (P.period == n && P.large) large = true;
      out.push_back({l + " large orbit of period " + std::to_string(n), large,
                     en.incomplete ? "enumeration incomplete" : ""});
    }
  } else if (id == "5_2") {
    auto F = example_5_2();
    out.push_back(rot_claim("ex5.2", F, make_q(-1, 3), make_q(1, 3)));
    auto want = TruncatedPeriodSet::range(N, 1, N);
    auto two = TruncatedPeriodSet::of(N, {2});
    out.push_back(set_claim("ex5.2 periods", periods_mod1(F, N), want.minus(two)));
  } else if (id == "6_1") {
    for (int n = 3; n <= 4; ++n) {
      auto F = example_6_1(n);
      std::string l = "ex6.1 n=" + std::to_string(n);
      out.push_back(rot_claim(l, F, Q(-(n - 2)), Q(1)));
      out.push_back(set_claim(l + " Per(0)", periods_for_rotation(F, 0, 1, N), TruncatedPeriodSet::range(N, n, N)));
      // Same claims for the reading F(a) = b-n+1.
      auto G = example_6_1(n, make_q(-1, 2), true);
      auto r = rotation_interval(G);
      auto per = periods_for_rotation(G, 0, 1, N);
      bool ok = r.lo == Q(-(n - 2)) && r.hi == Q(1) && per == TruncatedPeriodSet::range(N, n, N);
      out.push_back({l + " with F(a)=b-n+1: rot and Per(0) as stated", ok,
                     "rot = " + interval_str(r.lo, r.hi) + ", Per(0) = " + format_set(per), true});
    }
  } else if (id == "6_3") {
    for (int k = 3; k <= 4; ++k) {
      auto F = example_6_3(k);
      std::string l = "ex6.3 k=" + std::to_string(k);
      out.push_back(rot_claim(l, F, Q(-k + 2), Q(0)));
      out.push_back({l + " node orbit of period " + std::to_string(k + 1), has_node_period(F, k + 1), ""});
      auto per0 = periods_for_rotation(F, 0, 1, N);
      TruncatedPeriodSet first(N);
      first.insert(k);
      first.insert(k + 1);
      for (long i = 1; i * k <= N; ++i)
        for (long j = 1; i * k + j * (k + 1) <= N; ++j) first.insert(i * k + j * (k + 1));
      auto second = baldwin_tail(k, BaldwinValue::nat(k + 1), N).minus(TruncatedPeriodSet::of(N, {1}));
      out.push_back({l + " Per(0) contains {k,k+1} u {ik+j(k+1)}", first.subset_of(per0),
                     "Per(0) = " + format_set(per0)});
      Claim a{l + " Per(0) equals {k,k+1} u {ik+j(k+1)}", per0 == first, "description = " + format_set(first), true};
      Claim b{l + " Per(0) equals {n <=_k k+1} \\ {1}", per0 == second, "description = " + format_set(second), true};
      out.push_back(a);
      out.push_back(b);
    }
  } else if (id == "6_4") {
    auto F = example_6_4();
    out.push_back(rot_claim("ex6.4", F, Q(-5), Q(1)));
    out.push_back({"ex6.4 orbit of period 16", has_node_period(F, 16), ""});
    out.push_back(set_claim("ex6.4 Per(0)", periods_for_rotation(F, 0, 1, N), TruncatedPeriodSet::range(N, 6, N)));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown example '" + id + "'");
  }
  return out;
}

}  // namespace sigma
