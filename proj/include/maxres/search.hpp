// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include "simplify.hpp"

namespace maxres {

enum class LiteralHeuristic {
  weighted_jw,   // two-sided weighted Jeroslow–Wang
  lowest_index,  // first present variable, positive phase
};

struct SolverConfig {
  int level = 4;
  bool star = false;
  bool duc = false;
  std::optional<Weight> top_override;
  std::uint64_t node_limit = 0;       // 0 = unlimited
  double time_limit_seconds = 0.0;    // 0 = unlimited
  LiteralHeuristic heuristic = LiteralHeuristic::weighted_jw;
  // test hook, called after simplification at every node
  std::function<void(const WeightedFormula&, Weight)> node_inspector;
};

struct SolveResult {
  Weight optimum = 0;       // optimal model cost, or ⊤ when no model exists
  bool limit_reached = false;
  SolveStats stats;
};

// Branching literal. Scores each literal by Σ w·2^{-|C|} over the clauses
// containing it, picks the variable with the best combined score and its
// higher-scoring phase; ties break toward the lowest variable index and the
// positive phase.
inline Lit select_literal(const WeightedFormula& f,
                          LiteralHeuristic h = LiteralHeuristic::weighted_jw) {
  if (h == LiteralHeuristic::lowest_index) {
    for (Var v = 1; v <= f.num_vars(); ++v)
      if (f.var_present(v)) return Lit::pos(v);
    assert(false && "formula has no variables");
    return Lit();
  }
  std::vector<double> pos(f.num_vars() + 1, 0.0), neg(f.num_vars() + 1, 0.0);
  f.for_each_clause([&](const WeightedFormula::Slot& s) {
    double score = double(s.weight) * std::exp2(-double(s.lits.size()));
    for (Lit l : s.lits) (l.positive() ? pos : neg)[l.var()] += score;
  });
  Var best = 0;
  double best_score = -1.0;
  for (Var v = 1; v <= f.num_vars(); ++v) {
    double combined = pos[v] + neg[v];
    if (combined > 0.0 && combined > best_score) {
      best_score = combined;
      best = v;
    }
  }
  assert(best != 0 && "formula has no variables");
  return pos[best] >= neg[best] ? Lit::pos(best) : Lit::neg(best);
}

namespace detail {

class Searcher {
 public:
  Searcher(const SolverConfig& cfg) : cfg_(cfg) {
    if (cfg.time_limit_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(cfg.time_limit_seconds));
    }
  }

  // Depth-first branch and bound; the second branch inherits the first
  // branch's result as its ⊤, so softer clauses harden as the bound drops.
  Weight solve(WeightedFormula f, Weight top) {
    f.set_top(top);
    simplify(f, SimplifyOptions{cfg_.level, cfg_.star, cfg_.duc}, &stats_);
    if (cfg_.node_inspector) cfg_.node_inspector(f, top);
    if (f.empty()) return f.lower_bound();
    if (limit_ || out_of_budget()) {
      limit_ = true;
      return top;
    }
    ++stats_.nodes;
    Lit l = select_literal(f, cfg_.heuristic);
    Weight t1 = solve(f.assigned_copy(l), top);
    if (limit_) return t1;
    f.assign(~l);
    return solve(std::move(f), t1);
  }

  bool limit_reached() const { return limit_; }
  const SolveStats& stats() const { return stats_; }

 private:
  bool out_of_budget() {
    if (cfg_.node_limit && stats_.nodes >= cfg_.node_limit) return true;
    if (deadline_ && (stats_.nodes & 0xff) == 0 &&
        std::chrono::steady_clock::now() >= *deadline_)
      return true;
    return false;
  }

  const SolverConfig& cfg_;
  SolveStats stats_;
  bool limit_ = false;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace detail

// Returns the optimal model cost of (F,⊤) if a model exists, else ⊤.
inline SolveResult max_dpll(WeightedFormula f, const SolverConfig& cfg = {}) {
  if (cfg.top_override && *cfg.top_override < f.top())
    f.set_top(*cfg.top_override);
  Weight top = f.top();
  detail::Searcher searcher(cfg);
  SolveResult r;
  r.optimum = searcher.solve(std::move(f), top);
  r.limit_reached = searcher.limit_reached();
  r.stats = searcher.stats();
  return r;
}

}  // namespace maxres
