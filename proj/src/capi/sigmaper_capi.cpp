#include "sigmaper/sigmaper.h"

#include "sigmaper/constructions.hpp"
#include "sigmaper/errors.hpp"
#include "sigmaper/mapfile.hpp"
#include "sigmaper/oracle.hpp"
#include "sigmaper/orderings.hpp"
#include "sigmaper/random_map.hpp"
#include "sigmaper/report.hpp"
#include "sigmaper/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct sgp_map {
  sigma::Lifting F;
};

namespace {

thread_local std::string last_error;

int code_of(sigma::ErrorCode c) {
  using sigma::ErrorCode;
  switch (c) {
    case ErrorCode::SyntaxError: return SGP_ERR_SYNTAX;
    case ErrorCode::NotMarkov: return SGP_ERR_NOT_MARKOV;
    case ErrorCode::DuplicateNode: return SGP_ERR_DUPLICATE_NODE;
    case ErrorCode::DiscontinuousAtBase: return SGP_ERR_DISCONTINUOUS_AT_BASE;
    case ErrorCode::MissingNode: return SGP_ERR_MISSING_NODE;
    case ErrorCode::BadPartition: return SGP_ERR_BAD_PARTITION;
    case ErrorCode::NotALoop: return SGP_ERR_NOT_A_LOOP;
    case ErrorCode::NoCycle: return SGP_ERR_NO_CYCLE;
    case ErrorCode::NotAStarOrbit: return SGP_ERR_NOT_A_STAR_ORBIT;
    case ErrorCode::BadRotationData: return SGP_ERR_BAD_ROTATION_DATA;
    case ErrorCode::NotTrueOrbit: return SGP_ERR_NOT_TRUE_ORBIT;
    case ErrorCode::UnrepresentableTail: return SGP_ERR_UNREPRESENTABLE_TAIL;
    case ErrorCode::NotInDomain: return SGP_ERR_NOT_IN_DOMAIN;
    case ErrorCode::InvalidArgument: return SGP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Incomplete: return SGP_ERR_INCOMPLETE;
    case ErrorCode::Internal: return SGP_ERR_INTERNAL;
  }
  return SGP_ERR_INTERNAL;
}

template <class Fn>
int guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const sigma::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return SGP_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int need(const void* p, const char* what) {
  if (!p) throw sigma::Error(sigma::ErrorCode::InvalidArgument, std::string(what) + " is null");
  return 0;
}

void fill(const sigma::TruncatedPeriodSet& s, unsigned char* members) {
  for (int n = 0; n <= s.n_max(); ++n) members[n] = s.contains(n) ? 1 : 0;
}

sigma::TruncatedPeriodSet from_members(const unsigned char* members, int n_max) {
  sigma::TruncatedPeriodSet s(n_max);
  for (int n = 1; n <= n_max; ++n)
    if (members[n]) s.insert(n);
  return s;
}

void check_window(int n_max) {
  if (n_max < 1) throw sigma::Error(sigma::ErrorCode::InvalidArgument, "window must be at least 1");
}

}  // namespace

extern "C" {

const char* sgp_last_error(void) { return last_error.c_str(); }

void sgp_string_free(char* s) { std::free(s); }

int sgp_map_parse(const char* text, sgp_map** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new sgp_map{sigma::parse_map(text)};
    return SGP_OK;
  });
}

int sgp_map_load(const char* path, sgp_map** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new sgp_map{sigma::load_map(path)};
    return SGP_OK;
  });
}

int sgp_map_example(const char* id, long param, long param2, sgp_map** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    std::string s = id;
    sigma::Lifting F;
    if (s == "5_1")
      F = sigma::example_5_1(static_cast<int>(param));
    else if (s == "5_2")
      F = sigma::example_5_2();
    else if (s == "6_1")
      F = sigma::example_6_1(static_cast<int>(param));
    else if (s == "6_3")
      F = sigma::example_6_3(static_cast<int>(param));
    else if (s == "6_4")
      F = sigma::example_6_4();
    else if (s == "theorem_d")
      F = sigma::theorem_d_fixture().F;
    else if (s == "branch")
      F = sigma::branch_family(static_cast<int>(param), sigma::ShValue::nat(param2));
    else
      throw sigma::Error(sigma::ErrorCode::InvalidArgument, "unknown builder '" + s + "'");
    *out = new sgp_map{F};
    return SGP_OK;
  });
}

int sgp_map_random(unsigned long long seed, int degree, sgp_map** out) {
  return guard([&] {
    need(out, "out");
    *out = new sgp_map{sigma::random_lifting(seed, degree)};
    return SGP_OK;
  });
}

void sgp_map_free(sgp_map* m) { delete m; }

int sgp_map_to_text(const sgp_map* m, char** out) {
  return guard([&] {
    need(m, "map");
    need(out, "out");
    *out = dup(sigma::to_map_text(m->F));
    return SGP_OK;
  });
}

int sgp_graph_dot(const sgp_map* m, char** out) {
  return guard([&] {
    need(m, "map");
    need(out, "out");
    *out = dup(sigma::to_dot(sigma::markov_graph(m->F)));
    return SGP_OK;
  });
}

int sgp_rotation(const sgp_map* m, char** report) {
  return guard([&] {
    need(m, "map");
    need(report, "report");
    *report = dup(sigma::rot_report(m->F));
    return SGP_OK;
  });
}

int sgp_periods(const sgp_map* m, int n_max, unsigned char* members) {
  return guard([&] {
    need(m, "map");
    need(members, "members");
    check_window(n_max);
    fill(sigma::periods_mod1(m->F, n_max), members);
    return SGP_OK;
  });
}

int sgp_periods_at(const sgp_map* m, long p, long q, int n_max, unsigned char* members) {
  return guard([&] {
    need(m, "map");
    need(members, "members");
    check_window(n_max);
    fill(sigma::periods_for_rotation(m->F, p, q, n_max), members);
    return SGP_OK;
  });
}

int sgp_oracle_periods(const sgp_map* m, int n_max, long budget, unsigned char* members) {
  return guard([&] {
    need(m, "map");
    need(members, "members");
    check_window(n_max);
    auto r = sigma::pullback_oracle(m->F, n_max, budget);
    fill(r.periods, members);
    if (r.incomplete) {
      last_error = "Incomplete: oracle budget of " + std::to_string(budget) + " pieces exceeded";
      return SGP_ERR_INCOMPLETE;
    }
    return SGP_OK;
  });
}

int sgp_format_set(const unsigned char* members, int n_max, char** out) {
  return guard([&] {
    need(members, "members");
    need(out, "out");
    *out = dup(sigma::format_set(from_members(members, n_max)));
    return SGP_OK;
  });
}

int sgp_shape(const unsigned char* members, int n_max, char** out) {
  return guard([&] {
    need(members, "members");
    need(out, "out");
    *out = dup(sigma::shape_name(sigma::theorem_shape(from_members(members, n_max))));
    return SGP_OK;
  });
}

int sgp_classify(const sgp_map* m, int max_len, long budget, char** report) {
  return guard([&] {
    need(m, "map");
    need(report, "report");
    sigma::EnumerationOptions opt;
    opt.max_len = max_len;
    opt.budget = budget;
    auto en = sigma::enumerate_orbits(m->F, sigma::markov_graph(m->F), opt);
    std::string text;
    for (const auto& P : en.orbits) text += sigma::orbit_report(P);
    if (en.incomplete) text += "incomplete: budget exhausted after " + std::to_string(en.explored) + " steps\n";
    *report = dup(text);
    if (en.incomplete) {
      last_error = "Incomplete: loop search budget exceeded";
      return SGP_ERR_INCOMPLETE;
    }
    return SGP_OK;
  });
}

int sgp_verify_example(const char* id, int n_max, long budget, char** report, int* all_pass) {
  return guard([&] {
    need(id, "id");
    need(report, "report");
    need(all_pass, "all_pass");
    sigma::VerifyOptions opt;
    opt.n_max = n_max;
    opt.budget = budget;
    std::ostringstream os;
    bool ok = true;
    for (const auto& c : sigma::verify_example(id, opt)) {
      const char* tag = c.informational ? (c.pass ? "YES " : "NO  ") : (c.pass ? "PASS" : "FAIL");
      os << tag << "  " << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
      if (!c.informational && !c.pass) ok = false;
    }
    *report = dup(os.str());
    *all_pass = ok ? 1 : 0;
    return SGP_OK;
  });
}

int sgp_orders(const char* command, const char* const* args, int nargs, int n_max, char** out) {
  return guard([&] {
    need(command, "command");
    need(out, "out");
    std::vector<std::string> a;
    for (int i = 0; i < nargs; ++i) a.push_back(args[i]);
    auto want = [&](std::size_t n) {
      if (a.size() != n)
        throw sigma::Error(sigma::ErrorCode::InvalidArgument,
                           std::string(command) + " takes " + std::to_string(n) + " arguments");
    };
    auto num = [](const std::string& s) { return sigma::to_long(sigma::parse_q(s).get_num()); };
    auto bal = [&](const std::string& s) {
      return (s == "inf" || s == "2^inf") ? sigma::BaldwinValue::inf() : sigma::BaldwinValue::nat(num(s));
    };
    auto truth = [](bool b) { return std::string(b ? "true" : "false"); };
    std::string c = command, r;
    if (c == "expr") {
      want(1);
      auto e = sigma::parse_expr(a[0]);
      r = e.str() + " = " + sigma::format_set(e.evaluate(n_max));
    } else if (c == "sh-le") {
      want(2);
      r = truth(sigma::sh_le(sigma::ShValue::parse(a[0]), sigma::ShValue::parse(a[1])));
    } else if (c == "sh-tail") {
      want(1);
      r = sigma::format_set(sigma::sh_tail(sigma::ShValue::parse(a[0]), n_max));
    } else if (c == "baldwin-le") {
      want(3);
      r = truth(sigma::baldwin_le(num(a[0]), bal(a[1]), bal(a[2])));
    } else if (c == "baldwin-tail") {
      want(2);
      r = sigma::format_set(sigma::baldwin_tail(num(a[0]), bal(a[1]), n_max));
    } else if (c == "m") {
      want(2);
      r = sigma::format_set(sigma::m_interval(sigma::parse_q(a[0]), sigma::parse_q(a[1]), n_max));
    } else if (c == "union-of-tails") {
      want(2);
      auto e = sigma::parse_expr(a[0]).evaluate(n_max);
      r = truth(sigma::is_union_of_tails(e, num(a[1]))) + " (on [1.." + std::to_string(n_max) + "])";
    } else {
      throw sigma::Error(sigma::ErrorCode::InvalidArgument, "unknown orders command '" + c + "'");
    }
    *out = dup(r + "\n");
    return SGP_OK;
  });
}

}  // extern "C"
