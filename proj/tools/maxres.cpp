// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.
//
// Weighted Max-SAT command line front end. Output follows the evaluation
// convention: "o <cost>" for the optimum, "s OPTIMUM|UNSATISFIABLE|UNKNOWN"
// for the status, "c <key> <value>" for statistics.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <maxres/maxres.hpp>

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUnknown = 10;
constexpr int kExitResource = 20;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t clause_cap_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("MAXRES_CLAUSE_CAP"))
    return std::strtoull(env, nullptr, 10);
  return fallback;
}

void print_solve_stats(const maxres::SolveStats& st) {
  std::cout << "c nodes " << st.nodes << "\n"
            << "c max_simplify_iterations " << st.max_simplify_iterations << "\n"
            << "c hard_unit_assignments " << st.hard_unit_assignments << "\n"
            << "c hardenings " << st.hardenings << "\n"
            << "c neighborhood_steps " << st.neighborhood_steps << "\n"
            << "c chain_steps " << st.chain_steps << "\n"
            << "c cycle_steps " << st.cycle_steps << "\n"
            << "c star_steps " << st.star_steps << "\n"
            << "c duc_steps " << st.duc_steps << "\n";
}

struct SolveArgs {
  std::string file;
  int level = 4;
  bool star = false, duc = false, stats = false;
  std::uint64_t top = 0;
  double timeout = 0;
  std::uint64_t seed = 0;  // accepted for interface stability; the default
                           // heuristics are deterministic and ignore it
};

int run_solve(const SolveArgs& a) {
  maxres::WeightedFormula f = maxres::parse_wcnf(read_file(a.file));
  maxres::SolverConfig cfg;
  cfg.level = a.level;
  cfg.star = a.star;
  cfg.duc = a.duc;
  if (a.top > 0) cfg.top_override = a.top;
  cfg.time_limit_seconds = a.timeout;
  maxres::Weight top = a.top > 0 ? std::min<maxres::Weight>(a.top, f.top())
                                 : f.top();
  auto r = maxres::max_dpll(std::move(f), cfg);
  std::cout << "o " << r.optimum << "\n";
  int code;
  if (r.limit_reached) {
    std::cout << "s UNKNOWN\n";
    code = kExitUnknown;
  } else if (r.optimum >= top) {
    std::cout << "s UNSATISFIABLE\n";
    code = kExitSolved;
  } else {
    std::cout << "s OPTIMUM\n";
    code = kExitSolved;
  }
  if (a.stats) print_solve_stats(r.stats);
  return code;
}

struct DpArgs {
  std::string file;
  std::string order = "mindeg";
  std::uint64_t clause_cap = 10'000'000;
  bool stats = false;
};

int run_dp(const DpArgs& a) {
  maxres::WeightedFormula f = maxres::parse_wcnf(read_file(a.file));
  maxres::Weight top = f.top();
  maxres::ElimOptions opt;
  opt.clause_cap = clause_cap_from_env(a.clause_cap);
  if (a.order == "mindeg")
    opt.ordering = maxres::ElimOrdering::min_degree;
  else if (a.order == "minfill")
    opt.ordering = maxres::ElimOrdering::min_fill;
  else
    opt.ordering = maxres::ElimOrdering::given;
  maxres::ElimStats stats;
  maxres::Weight opt_cost = maxres::max_dp(std::move(f), opt, &stats);
  std::cout << "o " << opt_cost << "\n";
  std::cout << (opt_cost >= top ? "s UNSATISFIABLE\n" : "s OPTIMUM\n");
  if (a.stats) {
    std::cout << "c eliminations " << stats.eliminations << "\n"
              << "c resolution_steps " << stats.resolution_steps << "\n"
              << "c max_bucket_size " << stats.max_bucket_size << "\n"
              << "c max_bucket_width " << stats.max_bucket_width << "\n"
              << "c max_new_resolvents " << stats.max_new_resolvents << "\n";
  }
  return kExitSolved;
}

struct EncodeArgs {
  std::string kind;
  std::string file;
  std::uint64_t top = 0;
};

int run_encode(const EncodeArgs& a) {
  std::optional<maxres::Weight> top;
  if (a.top > 0) top = a.top;
  std::string text = read_file(a.file);
  maxres::WeightedFormula f;
  if (a.kind == "vc")
    f = maxres::encode_vertex_cover(maxres::parse_dimacs_graph(text), top);
  else if (a.kind == "clique")
    f = maxres::encode_max_clique(maxres::parse_dimacs_graph(text), top);
  else if (a.kind == "maxcut")
    f = maxres::encode_max_cut(maxres::parse_dimacs_graph(text), top);
  else if (a.kind == "maxone")
    f = maxres::encode_max_one(maxres::parse_dimacs_cnf(text), top);
  else
    f = maxres::encode_auction(maxres::parse_auction(text), top);
  std::cout << maxres::write_wcnf(f);
  return kExitSolved;
}

int run_oracle(const std::string& file, std::size_t cap) {
  maxres::WeightedFormula f = maxres::parse_wcnf(read_file(file));
  maxres::Weight top = f.top();
  auto r = maxres::brute_force_opt(f, cap);
  std::cout << "o " << r.optimum << "\n";
  if (r.witness) {
    std::cout << "s OPTIMUM\n";
    std::cout << "v";
    for (maxres::Var v = 1; v <= f.num_vars(); ++v)
      if (r.witness->assigned(v))
        std::cout << " " << (r.witness->value(v) ? v : -v);
    std::cout << "\n";
  } else {
    std::cout << (r.optimum >= top ? "s UNSATISFIABLE\n" : "s OPTIMUM\n");
  }
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Max-SAT solver with resolution-based simplification"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "branch-and-bound search (Max-DPLL)");
  solve->add_option("file", solve_args.file, "WCNF input")->required();
  solve->add_option("--level", solve_args.level, "inference level 1..4")
      ->check(CLI::Range(1, 4))
      ->default_val(4);
  solve->add_flag("--star", solve_args.star, "enable the star rule");
  solve->add_flag("--duc", solve_args.duc, "enable dominating unit clauses");
  solve->add_option("--top", solve_args.top, "override the upper bound");
  solve->add_option("--timeout", solve_args.timeout, "time limit in seconds");
  solve->add_option("--seed", solve_args.seed, "random seed (reserved)");
  solve->add_flag("--stats", solve_args.stats, "print statistics lines");

  DpArgs dp_args;
  auto* dp = app.add_subcommand("dp", "pure variable elimination (Max-DP)");
  dp->add_option("file", dp_args.file, "WCNF input")->required();
  dp->add_option("--order", dp_args.order, "elimination order")
      ->check(CLI::IsMember({"mindeg", "minfill", "given"}))
      ->default_val("mindeg");
  dp->add_option("--clause-cap", dp_args.clause_cap, "abort above this many clauses");
  dp->add_flag("--stats", dp_args.stats, "print statistics lines");

  EncodeArgs encode_args;
  auto* encode = app.add_subcommand("encode", "emit a WCNF encoding");
  encode
      ->add_option("kind", encode_args.kind,
                   "vc|clique|maxcut (DIMACS graph), maxone (DIMACS cnf), "
                   "auction (goods/bids text)")
      ->required()
      ->check(CLI::IsMember({"vc", "clique", "maxcut", "maxone", "auction"}));
  encode->add_option("file", encode_args.file, "input file")->required();
  encode->add_option("--top", encode_args.top, "pin the upper bound");

  auto* gen = app.add_subcommand("gen", "random instance generators");
  gen->require_subcommand(1);
  int g_k = 3, g_m = 0;
  maxres::Var g_n = 0;
  std::size_t g_e = 0;
  std::uint64_t g_seed = 0;
  auto* gen_ksat = gen->add_subcommand("ksat", "random k-SAT as WCNF");
  gen_ksat->add_option("--k", g_k, "clause length")->required();
  gen_ksat->add_option("--n", g_n, "variables")->required();
  gen_ksat->add_option("--m", g_m, "clauses")->required();
  gen_ksat->add_option("--seed", g_seed, "seed")->required();
  auto* gen_graph = gen->add_subcommand("graph", "random graph as DIMACS");
  gen_graph->add_option("--n", g_n, "vertices")->required();
  gen_graph->add_option("--e", g_e, "edges")->required();
  gen_graph->add_option("--seed", g_seed, "seed")->required();

  std::string opb_file;
  auto* opb = app.add_subcommand("export-opb", "emit a pseudo-Boolean encoding");
  opb->add_option("file", opb_file, "WCNF input")->required();

  std::string oracle_file;
  std::size_t oracle_cap = 24;
  auto* oracle = app.add_subcommand("oracle", "exhaustive reference solver");
  oracle->add_option("file", oracle_file, "WCNF input")->required();
  oracle->add_option("--cap", oracle_cap, "variable cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (dp->parsed()) return run_dp(dp_args);
    if (encode->parsed()) return run_encode(encode_args);
    if (gen->parsed()) {
      if (gen_ksat->parsed())
        std::cout << maxres::write_wcnf(
            maxres::gen_random_ksat(g_k, g_n, g_m, g_seed));
      else
        std::cout << maxres::write_dimacs_graph(
            maxres::gen_random_graph(g_n, g_e, g_seed));
      return kExitSolved;
    }
    if (opb->parsed())
      return std::cout << maxres::export_opb(
                 maxres::parse_wcnf(read_file(opb_file))),
             kExitSolved;
    if (oracle->parsed()) return run_oracle(oracle_file, oracle_cap);
  } catch (const maxres::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const maxres::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
