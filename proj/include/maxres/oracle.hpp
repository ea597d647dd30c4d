// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <bit>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "formula.hpp"

namespace maxres {

// Exhaustive ground-truth solver. Enumerates assignments in Gray-code order
// with incremental falsified-weight updates; behaves like naive enumeration.

namespace detail {

// Shared enumeration core: visit(mask, cost) for every assignment over vars,
// where bit i of mask gives the value of vars[i] and mask enumerates 0..2^n-1
// in plain binary order (Gray-code internally).
template <class Visit>
void enumerate_costs(const WeightedFormula& f, const std::vector<Var>& vars,
                     Visit&& visit) {
  std::vector<WeightedClause> clauses;
  f.for_each_clause([&](const WeightedFormula::Slot& s) {
    clauses.push_back(WeightedClause{s.lits, s.weight});
  });
  std::vector<int> pos_of(f.num_vars() + 1, -1);
  for (std::size_t i = 0; i < vars.size(); ++i) pos_of[vars[i]] = int(i);

  // occ[i] -> clauses touched when vars[i] flips, with the literal's sign
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> occ(vars.size());
  std::vector<std::uint32_t> unsat_count(clauses.size(), 0);
  unsigned __int128 falsified = 0;
  for (std::uint32_t ci = 0; ci < clauses.size(); ++ci) {
    for (Lit l : clauses[ci].lits) {
      int p = pos_of[l.var()];
      assert(p >= 0);
      occ[std::size_t(p)].push_back({ci, l.positive()});
      if (l.positive()) ++unsat_count[ci];  // start: all variables false
    }
    if (unsat_count[ci] == clauses[ci].lits.size())
      falsified += clauses[ci].weight;
  }

  const Weight lb = f.lower_bound(), top = f.top();
  auto cost = [&]() -> Weight {
    unsigned __int128 total = falsified + lb;
    return total >= top ? top : static_cast<Weight>(total);
  };

  std::uint64_t n_steps = vars.empty() ? 1 : (std::uint64_t(1) << vars.size());
  std::uint64_t gray = 0;
  visit(std::uint64_t(0), cost());
  for (std::uint64_t i = 1; i < n_steps; ++i) {
    std::uint64_t next_gray = i ^ (i >> 1);
    std::uint64_t flipped = next_gray ^ gray;
    int bit = std::countr_zero(flipped);
    bool now_true = (next_gray >> bit) & 1;
    for (auto [ci, positive] : occ[std::size_t(bit)]) {
      bool was_falsified = unsat_count[ci] == clauses[ci].lits.size();
      // literal satisfied iff sign matches the new value
      if (positive == now_true)
        --unsat_count[ci];
      else
        ++unsat_count[ci];
      bool is_falsified = unsat_count[ci] == clauses[ci].lits.size();
      if (was_falsified && !is_falsified) falsified -= clauses[ci].weight;
      if (!was_falsified && is_falsified) falsified += clauses[ci].weight;
    }
    gray = next_gray;
    visit(gray, cost());
  }
}

}  // namespace detail

struct OracleResult {
  Weight optimum = 0;
  std::optional<Assignment> witness;  // present iff optimum < top
};

inline OracleResult brute_force_opt(const WeightedFormula& f,
                                    std::size_t var_cap = 24) {
  std::vector<Var> vars = f.present_vars();
  if (vars.size() > var_cap)
    throw resource_limit_error("brute_force_opt: variable cap exceeded");
  Weight best = f.top();
  std::uint64_t best_mask = 0;
  bool found = false;
  detail::enumerate_costs(f, vars, [&](std::uint64_t mask, Weight c) {
    if (c < best || !found) {
      best = c;
      best_mask = mask;
      found = true;
    }
  });
  OracleResult r;
  r.optimum = best;
  if (best < f.top()) {
    Assignment a(f.num_vars());
    for (std::size_t i = 0; i < vars.size(); ++i)
      a.set(vars[i], (best_mask >> i) & 1);
    r.witness = std::move(a);
  }
  return r;
}

// Full cost table over an explicit variable list (must cover vars(F)).
// Index: bit i set = vars[i] true. Two formulas are equivalent iff their
// tables over the union variable set are equal.
struct CostTable {
  std::vector<Var> vars;
  std::vector<Weight> cost;

  friend bool operator==(const CostTable&, const CostTable&) = default;
};

inline CostTable per_assignment_table(const WeightedFormula& f,
                                      std::vector<Var> vars,
                                      std::size_t var_cap = 16) {
  if (vars.size() > var_cap)
    throw resource_limit_error("per_assignment_table: variable cap exceeded");
  CostTable t;
  t.vars = vars;
  t.cost.assign(vars.empty() ? 1 : (std::size_t(1) << vars.size()), 0);
  detail::enumerate_costs(f, vars,
                          [&](std::uint64_t mask, Weight c) { t.cost[mask] = c; });
  return t;
}

inline CostTable per_assignment_table(const WeightedFormula& f,
                                      std::size_t var_cap = 16) {
  return per_assignment_table(f, f.present_vars(), var_cap);
}

// Removes a variable from a table by taking the min over its two values.
inline CostTable min_project(const CostTable& t, Var v) {
  std::size_t i = 0;
  while (i < t.vars.size() && t.vars[i] != v) ++i;
  assert(i < t.vars.size());
  CostTable out;
  out.vars = t.vars;
  out.vars.erase(out.vars.begin() + i);
  std::uint64_t low = (std::uint64_t(1) << i) - 1;
  out.cost.resize(t.cost.size() / 2);
  for (std::uint64_t m = 0; m < out.cost.size(); ++m) {
    std::uint64_t base = ((m & ~low) << 1) | (m & low);
    out.cost[m] = std::min(t.cost[base], t.cost[base | (std::uint64_t(1) << i)]);
  }
  return out;
}

}  // namespace maxres
