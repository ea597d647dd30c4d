// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <optional>
#include <vector>

#include "formula.hpp"

namespace maxres {

// Clausal recovery of a weighted expression (prefix ∨ ¬(negated), u): the
// expression is falsified exactly when prefix is false and every literal of
// `negated` is... satisfied, i.e. `negated` holds. Outputs are canonical;
// tautologous outputs (possible when prefix and negated share variables)
// are dropped since they never cost anything.

// Exponential recursive form.
inline std::vector<WeightedClause> cnf_recover(const LitVec& prefix,
                                               const LitVec& negated,
                                               Weight u) {
  assert(!negated.empty());
  std::vector<WeightedClause> out;
  auto emit = [&](LitVec lits) {
    if (canonicalize(lits)) out.push_back(WeightedClause{std::move(lits), u});
  };
  auto rec = [&](auto&& self, const LitVec& pre, const LitVec& rest) -> void {
    Lit l = rest.front();
    LitVec tail(rest.begin() + 1, rest.end());
    LitVec with_neg = pre;
    with_neg.push_back(~l);
    if (tail.empty()) {
      emit(with_neg);
      return;
    }
    LitVec first = with_neg;
    first.insert(first.end(), tail.begin(), tail.end());
    emit(std::move(first));
    self(self, with_neg, tail);
    LitVec with_pos = pre;
    with_pos.push_back(l);
    self(self, with_pos, tail);
  };
  rec(rec, prefix, negated);
  return out;
}

// Linear form: |negated| clauses, peeling literals in canonical (ascending
// variable) order. Cost-equivalent to cnf_recover for every assignment.
inline std::vector<WeightedClause> cnf_linear(const LitVec& prefix,
                                              const LitVec& negated,
                                              Weight u) {
  assert(!negated.empty());
  std::vector<WeightedClause> out;
  for (std::size_t i = 0; i < negated.size(); ++i) {
    LitVec lits = prefix;
    lits.push_back(~negated[i]);
    lits.insert(lits.end(), negated.begin() + i + 1, negated.end());
    if (canonicalize(lits)) out.push_back(WeightedClause{std::move(lits), u});
  }
  return out;
}

// The decomposition produced by one Max-RES step on (x∨A,u), (x̄∨B,w):
// resolvent (A∨B,m), posterior clashing clauses (x∨A,u⊖m), (x̄∨B,w⊖m) and
// compensation clauses (x∨A∨¬B,m), (x̄∨¬A∨B,m) in clausal form, with the
// standard omissions applied (zero weights, tautologies, clauses absorbed by
// the resolvent or a mandatory posterior).
struct MaxResParts {
  Var pivot = 0;
  Weight m = 0;
  WeightedClause resolvent;
  std::vector<WeightedClause> rest;  // surviving posterior + compensation
};

// `eager_omissions=false` keeps absorbed clauses (zero weights and
// tautologies still vanish); the result stays cost-equivalent either way.
inline MaxResParts resolve_parts(const LitVec& c1, Weight u, const LitVec& c2,
                                 Weight w, Weight top,
                                 bool eager_omissions = true) {
  MaxResParts parts;
  // the pivot is the unique variable with opposite phases in c1 and c2
  for (Lit l : c1)
    if (const Lit* o = find_var(c2, l.var()); o && *o == ~l) {
      assert(parts.pivot == 0 && "clauses must clash on a single variable");
      parts.pivot = l.var();
    }
  assert(parts.pivot != 0 && "clauses do not share an opposite-phase variable");

  const Lit* p1 = find_var(c1, parts.pivot);
  Lit x = *p1;
  if (!x.positive()) return resolve_parts(c2, w, c1, u, top, eager_omissions);

  LitVec a = without_lit(c1, x);
  LitVec b = without_lit(c2, ~x);
  Weight m = std::min(u, w);
  parts.m = m;
  LitVec ab = set_union(a, b);
  bool not_taut = canonicalize(ab);
  assert(not_taut && "resolvent must not be a tautology");
  (void)not_taut;
  parts.resolvent = WeightedClause{std::move(ab), m};

  auto posterior = [&](const LitVec& self, const LitVec& other, Weight uw) {
    Weight rest_w = ominus(uw, m, top);
    if (rest_w == 0) return;
    if (eager_omissions && m == top && is_subset(other, self)) return;
    parts.rest.push_back(WeightedClause{self, rest_w});
  };
  posterior(c1, b, u);
  posterior(c2, a, w);

  // compensation (x∨A∨¬B, m); literals of B already in A drop out of the
  // negation, so B ⊆ A leaves a tautology
  auto compensation = [&](Lit self_lit, const LitVec& own, const LitVec& other,
                          Weight uw) {
    if (eager_omissions && uw == top) return;  // absorbed by the posterior
    LitVec shrunk = set_minus(other, own);
    if (shrunk.empty()) return;  // tautology
    LitVec pre = own;
    pre.push_back(self_lit);
    for (auto& c : cnf_linear(pre, shrunk, m)) parts.rest.push_back(std::move(c));
  };
  compensation(x, a, b, u);
  compensation(~x, b, a, w);
  return parts;
}

// Max-RES as a formula transformation: replaces the two clashing clauses by
// the right-hand side. Preserves the cost of every complete assignment.
inline void max_res(WeightedFormula& f, const LitVec& c1, const LitVec& c2,
                    bool eager_omissions = true) {
  std::size_t s1 = f.find(c1), s2 = f.find(c2);
  assert(s1 != WeightedFormula::npos && s2 != WeightedFormula::npos);
  MaxResParts parts = resolve_parts(c1, f.slot(s1).weight, c2,
                                    f.slot(s2).weight, f.top(), eager_omissions);
  f.remove(s1);
  f.remove(s2);
  f.add(parts.resolvent);
  for (const auto& c : parts.rest) f.add(c);
}

// Neighborhood resolution: {(l∨A,u),(l̄∨A,w)} ≡ {(A,w),(l∨A,u⊖w)}, w ≤ u.
inline void neighborhood_res(WeightedFormula& f, const LitVec& c1,
                             const LitVec& c2) {
  std::size_t s1 = f.find(c1), s2 = f.find(c2);
  assert(s1 != WeightedFormula::npos && s2 != WeightedFormula::npos);
  Weight u = f.slot(s1).weight, w = f.slot(s2).weight;
  if (u < w) {
    std::swap(s1, s2);
    std::swap(u, w);
  }
  const LitVec& big = f.slot(s1).lits;
  const LitVec& small = f.slot(s2).lits;
  Var pivot = 0;
  for (Lit l : big)
    if (const Lit* o = find_var(small, l.var()); o && *o == ~l) pivot = l.var();
  assert(pivot != 0);
  LitVec shared = without_lit(big, *find_var(big, pivot));
  assert(same_lits(shared, without_lit(small, *find_var(small, pivot))) &&
         "clauses must agree outside the clashing literal");
  LitVec keep = big;
  Weight rest = ominus(u, w, f.top());
  f.remove(s1);
  f.remove(s2);
  f.add_canonical(std::move(shared), w);
  if (rest != 0) f.add_canonical(std::move(keep), rest);
}

}  // namespace maxres
