#include "sigmaper/sigmaper.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIncomplete = 3;

struct Failure {
  int status;
};

int exit_code(int status) {
  if (status == SGP_OK) return kExitOk;
  if (status == SGP_ERR_INCOMPLETE) return kExitIncomplete;
  if (status == SGP_ERR_INTERNAL) return kExitFailed;
  return kExitInvalid;
}

void check(int status) {
  if (status == SGP_OK) return;
  std::cerr << "error: " << sgp_last_error() << "\n";
  throw Failure{status};
}

using MapPtr = std::unique_ptr<sgp_map, decltype(&sgp_map_free)>;

std::string take(char* s) {
  std::string out = s ? s : "";
  sgp_string_free(s);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    std::cerr << "error: expected an integer, got '" << s << "'\n";
    throw Failure{SGP_ERR_INVALID_ARGUMENT};
  }
  return v;
}

// A map source is a file path, example:ID[:a[:b]] or random:D (with --seed).
MapPtr open_map(const std::string& source, unsigned long long seed) {
  sgp_map* m = nullptr;
  if (source.rfind("example:", 0) == 0) {
    auto parts = split(source.substr(8), ':');
    long a = parts.size() > 1 ? to_long(parts[1]) : 0;
    long b = parts.size() > 2 ? to_long(parts[2]) : 0;
    check(sgp_map_example(parts[0].c_str(), a, b, &m));
  } else if (source.rfind("random:", 0) == 0) {
    check(sgp_map_random(seed, static_cast<int>(to_long(source.substr(7))), &m));
  } else {
    check(sgp_map_load(source.c_str(), &m));
  }
  return MapPtr(m, &sgp_map_free);
}

std::string set_text(const std::vector<unsigned char>& members, int n_max) {
  char* s = nullptr;
  check(sgp_format_set(members.data(), n_max, &s));
  return take(s);
}

std::string window(int n_max) { return "[1.." + std::to_string(n_max) + "]"; }

// Runs the oracle and reports agreement with the engine result.
int cross_check(const sgp_map* m, const std::vector<unsigned char>& engine, int n_max, long budget) {
  std::vector<unsigned char> oracle(n_max + 1);
  int st = sgp_oracle_periods(m, n_max, budget, oracle.data());
  if (st != SGP_OK && st != SGP_ERR_INCOMPLETE) check(st);
  std::cout << "oracle" << window(n_max) << " = " << set_text(oracle, n_max) << "\n";
  if (st == SGP_ERR_INCOMPLETE) {
    std::cout << "oracle: incomplete (budget exceeded)\n";
    return kExitIncomplete;
  }
  bool same = oracle == engine;
  std::cout << "oracle agrees: " << (same ? "yes" : "no") << "\n";
  return same ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov graphs, rotation intervals and periods of sigma-maps"};
  app.require_subcommand(1);

  int n_max = 20;
  long budget = 2000000;
  std::string dot_file;
  bool use_oracle = false;
  unsigned long long seed = 1;
  std::string source;

  auto common = [&](CLI::App* sub, bool with_map = true) {
    sub->add_option("--max", n_max, "Largest period considered")->check(CLI::Range(1, 1000));
    sub->add_option("--budget", budget, "Search budget (loop steps or oracle pieces)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Seed for random:D map sources");
    if (with_map) sub->add_option("map", source, "Map file, example:ID[:a[:b]] or random:D")->required();
  };

  auto* graph = app.add_subcommand("graph", "Markov covering graph");
  common(graph);
  graph->add_option("--dot", dot_file, "Write DOT to this file instead of stdout");

  auto* rot = app.add_subcommand("rot", "Rotation interval");
  common(rot);

  auto* periods = app.add_subcommand("periods", "Periods mod 1");
  common(periods);
  periods->add_flag("--oracle", use_oracle, "Cross-check against the pullback oracle");

  std::string rho;
  auto* periods_at = app.add_subcommand("periods-at", "Periods of orbits with rotation number p/q");
  common(periods_at);
  periods_at->add_option("rho", rho, "Rotation number p/q")->required();

  auto* emit = app.add_subcommand("emit", "Print a map in the map file format");
  common(emit);

  auto* classify = app.add_subcommand("classify", "Enumerate periodic orbits and flag them");
  common(classify);

  std::string example_id;
  auto* verify = app.add_subcommand("verify-example", "Check the claims about a worked example");
  common(verify, false);
  verify->add_option("id", example_id, "5_1, 5_2, 6_1, 6_3 or 6_4")->required();

  std::vector<std::string> order_args;
  auto* orders = app.add_subcommand("orders", "Sharkovsky and Baldwin orderings, period set expressions");
  common(orders, false);
  orders->add_option("args", order_args,
                     "expr E | sh-le a b | sh-tail s | baldwin-le t k m | baldwin-tail t m | m c d | "
                     "union-of-tails E t")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (graph->parsed()) {
      auto m = open_map(source, seed);
      char* s = nullptr;
      check(sgp_graph_dot(m.get(), &s));
      std::string dot = take(s);
      if (dot_file.empty()) {
        std::cout << dot;
      } else {
        std::ofstream f(dot_file);
        if (!f) {
          std::cerr << "error: cannot write " << dot_file << "\n";
          return kExitInvalid;
        }
        f << dot;
        std::cout << "wrote " << dot_file << "\n";
      }
      return kExitOk;
    }
    if (emit->parsed()) {
      auto m = open_map(source, seed);
      char* s = nullptr;
      check(sgp_map_to_text(m.get(), &s));
      std::cout << take(s);
      return kExitOk;
    }
    if (rot->parsed()) {
      auto m = open_map(source, seed);
      char* s = nullptr;
      check(sgp_rotation(m.get(), &s));
      std::cout << take(s);
      return kExitOk;
    }
    if (periods->parsed()) {
      auto m = open_map(source, seed);
      std::vector<unsigned char> members(n_max + 1);
      check(sgp_periods(m.get(), n_max, members.data()));
      char* shape = nullptr;
      check(sgp_shape(members.data(), n_max, &shape));
      std::cout << "periods" << window(n_max) << " = " << set_text(members, n_max) << "\n";
      std::cout << "shape = " << take(shape) << "\n";
      return use_oracle ? cross_check(m.get(), members, n_max, budget) : kExitOk;
    }
    if (periods_at->parsed()) {
      auto m = open_map(source, seed);
      auto pq = split(rho, '/');
      if (pq.size() > 2) {
        std::cerr << "error: expected p/q, got '" << rho << "'\n";
        return kExitInvalid;
      }
      long p = to_long(pq[0]), q = pq.size() == 2 ? to_long(pq[1]) : 1;
      std::vector<unsigned char> members(n_max + 1);
      check(sgp_periods_at(m.get(), p, q, n_max, members.data()));
      std::cout << "periods(" << rho << ")" << window(n_max) << " = " << set_text(members, n_max) << "\n";
      return kExitOk;
    }
    if (classify->parsed()) {
      auto m = open_map(source, seed);
      // Orbit enumeration is exponential in the period; default to short orbits.
      int len = classify->count("--max") ? n_max : 8;
      char* s = nullptr;
      int st = sgp_classify(m.get(), len, budget, &s);
      if (st != SGP_OK && st != SGP_ERR_INCOMPLETE) check(st);
      std::cout << take(s);
      return exit_code(st);
    }
    if (verify->parsed()) {
      char* s = nullptr;
      int all = 0;
      check(sgp_verify_example(example_id.c_str(), n_max, budget, &s, &all));
      std::cout << take(s);
      return all ? kExitOk : kExitFailed;
    }
    if (orders->parsed()) {
      std::vector<const char*> rest;
      for (std::size_t i = 1; i < order_args.size(); ++i) rest.push_back(order_args[i].c_str());
      char* s = nullptr;
      check(sgp_orders(order_args[0].c_str(), rest.data(), static_cast<int>(rest.size()), n_max, &s));
      std::cout << take(s);
      return kExitOk;
    }
  } catch (const Failure& f) {
    return exit_code(f.status);
  }
  return kExitInvalid;
}
