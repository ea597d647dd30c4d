// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

#include "assignment.hpp"
#include "clause.hpp"
#include "literal.hpp"
#include "weight.hpp"

namespace maxres {

// A weighted CNF formula (F,⊤) plus the weight of the empty clause (the
// lower bound). Stored clauses are canonical, pairwise distinct, and carry
// weights in [1..top]; duplicates aggregate with ⊕ on insertion.
//
// Clauses live in slots; removing a clause zeroes its weight and leaves the
// slot dead until compact() runs. Per-variable occurrence lists may contain
// dead slot ids, callers skip them. Everything is a value: copying a formula
// yields an independent instance.
class WeightedFormula {
 public:
  struct Slot {
    LitVec lits;
    Weight weight = 0;  // 0 = dead
  };
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  WeightedFormula() = default;
  WeightedFormula(Var num_vars, Weight top)
      : top_(top), num_vars_(num_vars), occ_(num_vars + 1) {
    assert(top >= 1);
  }

  Var num_vars() const { return num_vars_; }
  Weight top() const { return top_; }
  Weight lower_bound() const { return lb_; }
  bool contradiction() const { return lb_ == top_; }
  std::size_t clause_count() const { return live_; }
  bool empty() const { return live_ == 0; }

  void ensure_var(Var v) {
    if (v > num_vars_) {
      num_vars_ = v;
      occ_.resize(v + 1);
    }
  }

  // Canonicalizes, drops tautologies and zero weights, clamps w to top,
  // routes the empty clause into the lower bound and aggregates duplicates.
  void add_clause(LitVec lits, Weight w) {
    if (!canonicalize(lits)) return;
    add_canonical(std::move(lits), w);
  }

  void add_canonical(LitVec lits, Weight w) {
    if (w == 0) return;
    if (w > top_) w = top_;
    if (lits.empty()) {
      add_empty_clause(w);
      return;
    }
    ensure_var(lits.back().var());
    if (std::size_t s = find(lits); s != npos) {
      slots_[s].weight = oplus(slots_[s].weight, w, top_);
      return;
    }
    std::size_t id = slots_.size();
    for (Lit l : lits) occ_[l.var()].push_back(static_cast<std::uint32_t>(id));
    slots_.push_back(Slot{std::move(lits), w});
    ++live_;
  }

  void add(const WeightedClause& c) { add_clause(c.lits, c.weight); }

  void add_empty_clause(Weight w) { lb_ = oplus(lb_, w, top_); }

  // --- slot access -------------------------------------------------------

  std::size_t slot_count() const { return slots_.size(); }
  const Slot& slot(std::size_t i) const { return slots_[i]; }
  bool live(std::size_t i) const { return slots_[i].weight != 0; }

  void remove(std::size_t i) {
    assert(live(i));
    slots_[i].weight = 0;
    --live_;
  }

  void set_weight(std::size_t i, Weight w) {
    assert(live(i) && w <= top_);
    if (w == 0)
      remove(i);
    else
      slots_[i].weight = w;
  }

  // Slot holding exactly these canonical literals, or npos.
  std::size_t find(const LitVec& lits) const {
    assert(!lits.empty());
    Var v = lits.front().var();
    if (v > num_vars_) return npos;
    for (std::uint32_t id : occ_[v])
      if (slots_[id].weight != 0 && same_lits(slots_[id].lits, lits))
        return id;
    return npos;
  }

  Weight weight_of(const LitVec& lits) const {
    std::size_t s = find(lits);
    return s == npos ? 0 : slots_[s].weight;
  }

  using OccList = boost::container::small_vector<std::uint32_t, 8>;

  // May contain dead slot ids.
  const OccList& occurrences(Var v) const {
    assert(v >= 1 && v <= num_vars_);
    return occ_[v];
  }

  template <class Fn>
  void for_each_clause(Fn&& fn) const {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (slots_[i].weight != 0) fn(slots_[i]);
  }

  // --- operations ---------------------------------------------------------

  // F[l]: clauses containing l are removed, ~l is removed from the rest;
  // emptied clauses flow into the lower bound. var(l) is absent afterwards.
  void assign(Lit l) {
    Var v = l.var();
    if (v > num_vars_) return;
    OccList ids = std::move(occ_[v]);
    occ_[v].clear();
    for (std::uint32_t id : ids) {
      if (slots_[id].weight == 0) continue;
      Weight w = slots_[id].weight;
      if (contains_lit(slots_[id].lits, l)) {
        remove(id);
      } else {
        LitVec rest = without_lit(slots_[id].lits, ~l);
        remove(id);
        add_canonical(std::move(rest), w);
      }
    }
  }

  // Fused copy + assign + compaction; used at branch points. Clauses not
  // touching var(l) stay pairwise distinct and skip the duplicate lookup;
  // shortened clauses are aggregated in afterwards.
  WeightedFormula assigned_copy(Lit l) const {
    WeightedFormula out(num_vars_, top_);
    out.lb_ = lb_;
    out.slots_.reserve(live_);
    boost::container::small_vector<std::uint32_t, 16> shortened;
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      if (s.weight == 0) continue;
      if (const Lit* at = find_var(s.lits, l.var())) {
        if (*at != l) shortened.push_back(i);
        continue;
      }
      std::uint32_t id = std::uint32_t(out.slots_.size());
      for (Lit x : s.lits) out.occ_[x.var()].push_back(id);
      out.slots_.push_back(s);
      ++out.live_;
    }
    for (std::uint32_t i : shortened)
      out.add_canonical(without_lit(slots_[i].lits, ~l), slots_[i].weight);
    return out;
  }

  // Removes every clause that is a proper superset of a mandatory clause.
  // An explicit contradiction collapses the formula to {(□,⊤)}.
  std::size_t absorb() {
    if (contradiction()) {
      std::size_t removed = live_;
      collapse_to_contradiction();
      return removed;
    }
    std::size_t removed = 0;
    std::size_t n = slots_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (slots_[i].weight != top_) continue;
      const LitVec& m = slots_[i].lits;
      for (std::uint32_t id : occ_[m.front().var()]) {
        if (id == i || slots_[id].weight == 0) continue;
        if (slots_[id].lits.size() > m.size() && is_subset(m, slots_[id].lits)) {
          remove(id);
          ++removed;
        }
      }
    }
    return removed;
  }

  // Hardening: (C,w) becomes mandatory when lb ⊕ w = ⊤, and for clause
  // pairs C1 ⊂ C2 with |C2| <= 2 when u1 ⊕ u2 = ⊤. Runs to fixpoint.
  std::size_t harden() {
    std::size_t hardened = 0;
    // dense unit weights per literal key; avoids occurrence scans
    thread_local std::vector<Weight> unit_w;
    unit_w.assign(2 * std::size_t(num_vars_) + 2, 0);
    for (const Slot& s : slots_)
      if (s.weight != 0 && s.lits.size() == 1)
        unit_w[s.lits.front().key()] = s.weight;
    bool again = true;
    while (again) {
      again = false;
      for (Slot& s : slots_) {
        if (s.weight == 0 || s.weight == top_) continue;
        bool hard = oplus(lb_, s.weight, top_) == top_;
        if (!hard && s.lits.size() == 2) {
          // proper subset pairs C1 ⊂ C2 among small clauses
          for (Lit l : s.lits) {
            Weight sub = unit_w[l.key()];
            if (sub != 0 && oplus(sub, s.weight, top_) == top_) {
              hard = true;
              break;
            }
          }
        }
        if (hard) {
          s.weight = top_;
          if (s.lits.size() == 1) unit_w[s.lits.front().key()] = top_;
          ++hardened;
          again = true;
        }
      }
    }
    return hardened;
  }

  // Removes all clauses of every variable occurring with a single polarity;
  // repeats to fixpoint.
  std::size_t pure_literal() {
    std::size_t removed = 0;
    bool again = true;
    while (again) {
      again = false;
      for (Var v = 1; v <= num_vars_; ++v) {
        std::size_t pos = 0, neg = 0;
        for (std::uint32_t id : occ_[v]) {
          if (slots_[id].weight == 0) continue;
          const Lit* at = find_var(slots_[id].lits, v);
          if (!at) continue;
          (at->positive() ? pos : neg)++;
        }
        if ((pos == 0) == (neg == 0)) continue;
        for (std::uint32_t id : occ_[v]) {
          if (slots_[id].weight != 0 && find_var(slots_[id].lits, v)) {
            remove(id);
            ++removed;
          }
        }
        occ_[v].clear();
        again = true;
      }
    }
    return removed;
  }

  // lb ⊕ Σ⊕ of falsified clause weights. Requires a complete assignment
  // over the formula's present variables.
  Weight cost_of(const Assignment& a) const {
    assert(a.complete_over(present_vars()));
    unsigned __int128 sum = lb_;
    for (const Slot& s : slots_) {
      if (s.weight == 0) continue;
      bool sat = false;
      for (Lit l : s.lits)
        if (a.satisfies(l)) {
          sat = true;
          break;
        }
      if (!sat) sum += s.weight;
    }
    return sum >= top_ ? top_ : static_cast<Weight>(sum);
  }

  // Lowers ⊤; weights at or above the new bound become mandatory.
  void set_top(Weight new_top) {
    assert(new_top <= top_);
    if (new_top == top_) return;
    top_ = new_top;
    if (lb_ > top_) lb_ = top_;
    for (Slot& s : slots_)
      if (s.weight > top_) {
        s.weight = top_;
        if (top_ == 0) --live_;
      }
  }

  void collapse_to_contradiction() {
    lb_ = top_;
    for (Slot& s : slots_) s.weight = 0;
    live_ = 0;
    for (auto& o : occ_) o.clear();
  }

  // --- queries ------------------------------------------------------------

  bool var_present(Var v) const {
    if (v < 1 || v > num_vars_) return false;
    for (std::uint32_t id : occ_[v])
      if (slots_[id].weight != 0 && find_var(slots_[id].lits, v)) return true;
    return false;
  }

  std::vector<Var> present_vars() const {
    std::vector<Var> out;
    for (Var v = 1; v <= num_vars_; ++v)
      if (var_present(v)) out.push_back(v);
    return out;
  }

  // Live clauses in canonical order.
  std::vector<WeightedClause> canonical_clauses() const {
    std::vector<WeightedClause> out;
    out.reserve(live_);
    for_each_clause([&](const Slot& s) {
      out.push_back(WeightedClause{s.lits, s.weight});
    });
    std::sort(out.begin(), out.end(),
              [](const WeightedClause& a, const WeightedClause& b) {
                return clause_less(a.lits, b.lits);
              });
    return out;
  }

  // Structural equality: same top, lower bound and clause set.
  bool same_instance(const WeightedFormula& o) const {
    return top_ == o.top_ && lb_ == o.lb_ && live_ == o.live_ &&
           canonical_clauses() == o.canonical_clauses();
  }

  // Drops dead slots and stale occurrence entries; slot order is preserved,
  // slot ids are not. Never call while holding slot ids.
  void compact() {
    std::vector<Slot> fresh;
    fresh.reserve(live_);
    for (Slot& s : slots_)
      if (s.weight != 0) fresh.push_back(std::move(s));
    slots_ = std::move(fresh);
    for (auto& o : occ_) o.clear();
    for (std::size_t id = 0; id < slots_.size(); ++id)
      for (Lit l : slots_[id].lits)
        occ_[l.var()].push_back(static_cast<std::uint32_t>(id));
  }

  bool bloated() const { return slots_.size() > 2 * live_ + 32; }

 private:
  Weight top_ = 1;
  Weight lb_ = 0;
  Var num_vars_ = 0;
  std::vector<Slot> slots_;
  std::vector<OccList> occ_;  // index 0 unused
  std::size_t live_ = 0;
};

}  // namespace maxres
