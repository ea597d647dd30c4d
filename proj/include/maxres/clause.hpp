// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>

#include "literal.hpp"
#include "weight.hpp"

namespace maxres {

// Most clauses the solver touches are unit/binary/ternary; keep them inline.
using LitVec = boost::container::small_vector<Lit, 4>;

struct WeightedClause {
  LitVec lits;
  Weight weight = 0;

  friend bool operator==(const WeightedClause& a, const WeightedClause& b) {
    return a.weight == b.weight &&
           std::equal(a.lits.begin(), a.lits.end(), b.lits.begin(),
                      b.lits.end());
  }
};

// Sorts by variable index and drops repeated literals. Returns false if the
// clause is a tautology (both phases of a variable present); tautologies
// carry no cost and are never stored.
inline bool canonicalize(LitVec& lits) {
  std::sort(lits.begin(), lits.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (out > 0 && lits[i].var() == lits[out - 1].var()) {
      if (lits[i] == lits[out - 1]) continue;
      return false;
    }
    lits[out++] = lits[i];
  }
  lits.resize(out);
  return true;
}

// Canonical order between clauses: lexicographic on literal keys, with a
// proper prefix sorting before its extensions.
inline bool clause_less(const LitVec& a, const LitVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool same_lits(const LitVec& a, const LitVec& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// a ⊆ b for canonical clauses.
inline bool is_subset(const LitVec& a, const LitVec& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_lit(const LitVec& c, Lit l) {
  return std::binary_search(c.begin(), c.end(), l);
}

// Pointer to the literal over v, or nullptr.
inline const Lit* find_var(const LitVec& c, Var v) {
  auto it = std::lower_bound(c.begin(), c.end(), Lit::neg(v));
  if (it != c.end() && it->var() == v) return &*it;
  return nullptr;
}

inline LitVec without_lit(const LitVec& c, Lit l) {
  LitVec out;
  out.reserve(c.size());
  for (Lit x : c)
    if (x != l) out.push_back(x);
  return out;
}

// c1 \ c2 as literal sets (both canonical).
inline LitVec set_minus(const LitVec& c1, const LitVec& c2) {
  LitVec out;
  std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(),
                      std::back_inserter(out));
  return out;
}

inline LitVec set_union(const LitVec& c1, const LitVec& c2) {
  LitVec out;
  std::set_union(c1.begin(), c1.end(), c2.begin(), c2.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace maxres
