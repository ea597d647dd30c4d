// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cstdint>
#include <vector>

#include "hyper.hpp"

namespace maxres {

// Inference levels: 1 = unit clause reduction/aggregation/hardening only,
// 2 adds neighborhood resolution, 3 adds chain resolution, 4 adds cycle
// resolution over variable triples.
struct SimplifyOptions {
  int level = 4;
  bool star = false;  // off by default; only three rules pay off in general
  bool duc = false;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t max_simplify_iterations = 0;
  std::uint64_t hard_unit_assignments = 0;
  std::uint64_t hardenings = 0;
  std::uint64_t neighborhood_steps = 0;
  std::uint64_t chain_steps = 0;
  std::uint64_t cycle_steps = 0;
  std::uint64_t star_steps = 0;
  std::uint64_t duc_steps = 0;
};

namespace detail {

inline bool find_hard_unit(const WeightedFormula& f, Lit& out) {
  const Weight top = f.top();
  for (std::size_t i = 0; i < f.slot_count(); ++i) {
    const auto& s = f.slot(i);
    if (s.weight == top && s.lits.size() == 1) {
      out = s.lits.front();
      return true;
    }
  }
  return false;
}

// One step of the highest-priority rules, fused into a single scan: assigns
// the first mandatory unit if there is one, otherwise hardens. Weight maxima
// collected along the way prove most hardening passes unnecessary.
enum class BasicStep { none, assigned, hardened };

inline BasicStep basic_step(WeightedFormula& f, Lit& assigned_out,
                            std::size_t& hardened_count) {
  const Weight top = f.top();
  Weight max_soft = 0, max_unit = 0, max_bin = 0;
  for (std::size_t i = 0; i < f.slot_count(); ++i) {
    const auto& s = f.slot(i);
    if (s.weight == 0) continue;
    if (s.lits.size() == 1) {
      if (s.weight == top) {
        assigned_out = s.lits.front();
        return BasicStep::assigned;
      }
      max_unit = std::max(max_unit, s.weight);
    }
    if (s.weight != top) {
      max_soft = std::max(max_soft, s.weight);
      if (s.lits.size() == 2) max_bin = std::max(max_bin, s.weight);
    }
  }
  bool lb_trigger =
      max_soft != 0 && oplus(f.lower_bound(), max_soft, top) == top;
  bool pair_trigger =
      max_unit != 0 && max_bin != 0 && oplus(max_unit, max_bin, top) == top;
  if (!lb_trigger && !pair_trigger) return BasicStep::none;
  hardened_count = f.harden();
  return hardened_count != 0 ? BasicStep::hardened : BasicStep::none;
}

// First neighborhood pair with shared part |A| <= 1, scanning variables in
// ascending order.
inline bool find_neighborhood_pair(const WeightedFormula& f, LitVec& c1,
                                   LitVec& c2) {
  for (Var v = 1; v <= f.num_vars(); ++v) {
    const auto& occ = f.occurrences(v);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (!f.live(occ[i])) continue;
      const LitVec& a = f.slot(occ[i]).lits;
      if (a.size() > 2) continue;
      const Lit* la = find_var(a, v);
      if (!la) continue;
      for (std::size_t j = i + 1; j < occ.size(); ++j) {
        if (!f.live(occ[j])) continue;
        const LitVec& b = f.slot(occ[j]).lits;
        if (b.size() != a.size()) continue;
        const Lit* lb = find_var(b, v);
        if (!lb || *lb != ~*la) continue;
        if (!same_lits(without_lit(a, *la), without_lit(b, *lb))) continue;
        c1 = a;
        c2 = b;
        return true;
      }
    }
  }
  return false;
}

// Binary clause whose two literals both appear negated in unit clauses.
inline bool find_star(const WeightedFormula& f, LitVec& clause) {
  bool found = false;
  f.for_each_clause([&](const WeightedFormula::Slot& s) {
    if (found || s.lits.size() != 2) return;
    if (f.weight_of(LitVec{~s.lits[0]}) == 0) return;
    if (f.weight_of(LitVec{~s.lits[1]}) == 0) return;
    clause = s.lits;
    found = true;
  });
  return found;
}

// Triple pattern (l̄1∨l2,·), (l̄2∨l3,·), (l̄1∨l̄3,·) over distinct variables,
// restricted to binary clauses.
inline bool find_cycle3(const WeightedFormula& f, std::vector<Lit>& cyc) {
  for (Var v = 1; v <= f.num_vars(); ++v) {
    for (Lit l1 : {Lit::neg(v), Lit::pos(v)}) {
      const auto& occ = f.occurrences(v);
      // binaries containing ~l1
      std::vector<Lit> others;
      for (std::uint32_t id : occ) {
        if (!f.live(id) || f.slot(id).lits.size() != 2) continue;
        const LitVec& lits = f.slot(id).lits;
        if (!contains_lit(lits, ~l1)) continue;
        others.push_back(lits[0].var() == v ? lits[1] : lits[0]);
      }
      for (std::size_t i = 0; i < others.size(); ++i) {
        for (std::size_t j = 0; j < others.size(); ++j) {
          if (i == j) continue;
          Lit l2 = others[i];      // from (l̄1 ∨ l2)
          Lit l3 = ~others[j];     // from (l̄1 ∨ l̄3)
          if (l2.var() == l3.var()) continue;
          LitVec link{~l2, l3};
          canonicalize(link);
          if (f.weight_of(link) == 0) continue;
          cyc = {l1, l2, l3};
          return true;
        }
      }
    }
  }
  return false;
}

inline bool find_duc(const WeightedFormula& f, Lit& out) {
  for (Var v = 1; v <= f.num_vars(); ++v)
    for (Lit l : {Lit::neg(v), Lit::pos(v)})
      if (duc_applicable(f, l)) {
        out = l;
        return true;
      }
  return false;
}

}  // namespace detail

// The prioritized simplification loop: hard-unit assignment > aggregation
// (maintained on insertion) > hardening > neighborhood resolution (|A|<=1)
// > [star] > chain resolution > cycle resolution (k=3) > [DUC]. Runs until
// no enabled rule fires or the lower bound reaches ⊤, in which case the
// formula collapses to {(□,⊤)}. Literals forced by hard units are appended
// to *forced when given.
inline void simplify(WeightedFormula& f, const SimplifyOptions& opt = {},
                     SolveStats* stats = nullptr,
                     std::vector<Lit>* forced = nullptr) {
  std::uint64_t iterations = 0;
  for (;;) {
    if (f.contradiction()) {
      f.collapse_to_contradiction();
      break;
    }
    if (f.bloated()) f.compact();
    ++iterations;

    Lit unit;
    std::size_t hardened = 0;
    switch (detail::basic_step(f, unit, hardened)) {
      case detail::BasicStep::assigned:
        f.assign(unit);
        if (stats) ++stats->hard_unit_assignments;
        if (forced) forced->push_back(unit);
        continue;
      case detail::BasicStep::hardened:
        if (stats) stats->hardenings += hardened;
        continue;
      case detail::BasicStep::none:
        break;
    }
    LitVec c1, c2;
    if (opt.level >= 2 && detail::find_neighborhood_pair(f, c1, c2)) {
      neighborhood_res(f, c1, c2);
      if (stats) ++stats->neighborhood_steps;
      continue;
    }
    if (opt.star) {
      LitVec clause;
      if (detail::find_star(f, clause)) {
        star_rule(f, clause);
        if (stats) ++stats->star_steps;
        continue;
      }
    }
    if (opt.level >= 3) {
      ImplicationGraph g = build_implication_graph(f);
      if (auto chain = detect_chain(g)) {
        chain_resolution(f, *chain);
        if (stats) ++stats->chain_steps;
        continue;
      }
    }
    if (opt.level >= 4) {
      std::vector<Lit> cyc;
      if (detail::find_cycle3(f, cyc)) {
        cycle_resolution(f, cyc);
        if (stats) ++stats->cycle_steps;
        continue;
      }
    }
    if (opt.duc) {
      Lit l;
      if (detail::find_duc(f, l)) {
        dominating_unit_clause(f, l);
        if (stats) ++stats->duc_steps;
        continue;
      }
    }
    break;
  }
  if (stats && iterations > stats->max_simplify_iterations)
    stats->max_simplify_iterations = iterations;
}

}  // namespace maxres
