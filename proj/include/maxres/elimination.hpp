// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <set>
#include <vector>

#include "errors.hpp"
#include "resolution.hpp"
#include "simplify.hpp"

namespace maxres {

// Variable co-occurrence graph of a formula.
struct InteractionGraph {
  Var n = 0;
  std::vector<char> present;       // 1-based
  std::vector<std::set<Var>> adj;  // 1-based

  std::size_t degree(Var v) const { return adj[v].size(); }
  std::size_t vertex_count() const {
    std::size_t c = 0;
    for (Var v = 1; v <= n; ++v) c += present[v] != 0;
    return c;
  }
  std::vector<std::pair<Var, Var>> edges() const {
    std::vector<std::pair<Var, Var>> out;
    for (Var v = 1; v <= n; ++v)
      for (Var w : adj[v])
        if (v < w) out.push_back({v, w});
    return out;
  }
  void connect(Var a, Var b) {
    if (a == b) return;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  void remove_vertex(Var v) {
    for (Var w : adj[v]) adj[w].erase(v);
    adj[v].clear();
    present[v] = 0;
  }
};

inline InteractionGraph interaction_graph(const WeightedFormula& f) {
  InteractionGraph g;
  g.n = f.num_vars();
  g.present.assign(g.n + 1, 0);
  g.adj.assign(g.n + 1, {});
  f.for_each_clause([&](const WeightedFormula::Slot& s) {
    for (std::size_t i = 0; i < s.lits.size(); ++i) {
      g.present[s.lits[i].var()] = 1;
      for (std::size_t j = i + 1; j < s.lits.size(); ++j)
        g.connect(s.lits[i].var(), s.lits[j].var());
    }
  });
  return g;
}

// An elimination order with its per-variable widths in the induced graph.
// The induced graph processes vertices from the back of `order` to the
// front, connecting every pair of unconnected parents.
struct EliminationOrder {
  std::vector<Var> order;
  std::vector<int> width;  // per position in `order`
  int induced_width = 0;
  std::vector<std::pair<Var, Var>> added_edges;
};

inline EliminationOrder induced_width(const InteractionGraph& g,
                                      const std::vector<Var>& order) {
  InteractionGraph work = g;
  EliminationOrder out;
  out.order = order;
  out.width.assign(order.size(), 0);
  std::vector<int> position(g.n + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = int(i);
  for (std::size_t i = order.size(); i-- > 0;) {
    Var v = order[i];
    std::vector<Var> parents;
    for (Var w : work.adj[v])
      if (position[w] >= 0 && position[w] < int(i)) parents.push_back(w);
    out.width[i] = int(parents.size());
    out.induced_width = std::max(out.induced_width, out.width[i]);
    for (std::size_t a = 0; a < parents.size(); ++a)
      for (std::size_t b = a + 1; b < parents.size(); ++b)
        if (!work.adj[parents[a]].count(parents[b])) {
          work.connect(parents[a], parents[b]);
          out.added_edges.push_back(
              {std::min(parents[a], parents[b]), std::max(parents[a], parents[b])});
        }
  }
  return out;
}

// Min-degree vertex of the current graph; ties break toward the lowest
// index. Finding an optimal order is NP-hard, this is the standard greedy
// approximation.
inline Var select_elim_var(const InteractionGraph& g) {
  Var best = 0;
  std::size_t best_deg = 0;
  for (Var v = 1; v <= g.n; ++v) {
    if (!g.present[v]) continue;
    if (best == 0 || g.degree(v) < best_deg) {
      best = v;
      best_deg = g.degree(v);
    }
  }
  assert(best != 0 && "graph is empty");
  return best;
}

// Static min-fill elimination sequence (first element eliminated first).
inline std::vector<Var> min_fill_order(InteractionGraph g) {
  std::vector<Var> out;
  for (;;) {
    Var best = 0;
    std::size_t best_fill = 0;
    for (Var v = 1; v <= g.n; ++v) {
      if (!g.present[v]) continue;
      std::size_t fill = 0;
      std::vector<Var> nb(g.adj[v].begin(), g.adj[v].end());
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!g.adj[nb[i]].count(nb[j])) ++fill;
      if (best == 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    if (best == 0) break;
    out.push_back(best);
    std::vector<Var> nb(g.adj[best].begin(), g.adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) g.connect(nb[i], nb[j]);
    g.remove_vertex(best);
  }
  return out;
}

enum class ElimOrdering { min_degree, min_fill, given };

struct ElimOptions {
  ElimOrdering ordering = ElimOrdering::min_degree;
  std::uint64_t clause_cap = 10'000'000;  // live clauses, formula + bucket
  bool check_saturation = false;          // debug spot-assert (Appendix lemma)
};

struct ElimStep {
  Var var = 0;
  int bucket_width = 0;            // neighbor variables at elimination time
  std::size_t bucket_peak = 0;     // max distinct clauses held by the bucket
  std::size_t new_resolvents = 0;  // distinct resolvents added to F
};

struct ElimStats {
  std::uint64_t eliminations = 0;
  std::uint64_t resolution_steps = 0;
  std::size_t max_bucket_size = 0;
  int max_bucket_width = 0;
  std::size_t max_new_resolvents = 0;
  bool record_steps = false;
  std::vector<ElimStep> steps;
};

namespace detail {

// The bucket of the variable being eliminated: an aggregated clause set.
class Bucket {
 public:
  explicit Bucket(Weight top) : top_(top) {}

  void add(LitVec lits, Weight w) {
    if (w == 0) return;
    if (w > top_) w = top_;
    for (auto& it : items_)
      if (it.weight != 0 && same_lits(it.lits, lits)) {
        it.weight = oplus(it.weight, w, top_);
        return;
      }
    items_.push_back(WeightedClause{std::move(lits), w});
    ++live_;
  }

  std::size_t live() const { return live_; }
  const std::vector<WeightedClause>& items() const { return items_; }

  // Smallest live clause containing `must`, ties by canonical clause order.
  std::size_t find_min(Lit must) const {
    std::size_t best = npos;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].weight == 0 || !contains_lit(items_[i].lits, must)) continue;
      if (best == npos || items_[i].lits.size() < items_[best].lits.size() ||
          (items_[i].lits.size() == items_[best].lits.size() &&
           clause_less(items_[i].lits, items_[best].lits)))
        best = i;
    }
    return best;
  }

  void kill(std::size_t i) {
    assert(items_[i].weight != 0);
    items_[i].weight = 0;
    --live_;
  }
  void set_weight(std::size_t i, Weight w) {
    if (w == 0)
      kill(i);
    else
      items_[i].weight = w;
  }
  WeightedClause take(std::size_t i) {
    WeightedClause c = items_[i];
    kill(i);
    return c;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  Weight top_;
  std::vector<WeightedClause> items_;
  std::size_t live_ = 0;
};

// A∨B is absorbed if some mandatory clause of F or the bucket is contained
// in it. Together with the tautology check this is the clash test.
inline bool absorbed(const WeightedFormula& f, const Bucket& bucket,
                     const LitVec& ab) {
  if (f.contradiction()) return true;  // (□,⊤) absorbs everything
  for (Lit l : ab)
    if (l.var() <= f.num_vars())
      for (std::uint32_t id : f.occurrences(l.var())) {
        if (!f.live(id) || f.slot(id).weight != f.top()) continue;
        if (is_subset(f.slot(id).lits, ab)) return true;
      }
  for (const auto& c : bucket.items())
    if (c.weight == f.top() && is_subset(c.lits, ab)) return true;
  return false;
}

inline bool clashes(const WeightedFormula& f, const Bucket& bucket,
                    const LitVec& a, const LitVec& b) {
  LitVec ab = set_union(a, b);
  if (!canonicalize(ab)) return false;  // tautology
  return !absorbed(f, bucket, ab);
}

}  // namespace detail

// Eliminates variable x from F while preserving the optimal cost: clauses
// over x move to a bucket; positive-x clauses are popped smallest-first and
// resolved against clashing negative-x partners until their weight runs out
// or they saturate; resolvents land back in F, compensation clauses in the
// bucket; whatever remains in the bucket is discarded.
inline void max_var_elim(WeightedFormula& f, Var x, const ElimOptions& opt = {},
                         ElimStats* stats = nullptr) {
  detail::Bucket bucket(f.top());
  {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t id : f.occurrences(x))
      if (f.live(id) && find_var(f.slot(id).lits, x)) ids.push_back(id);
    for (std::uint32_t id : ids) {
      bucket.add(f.slot(id).lits, f.slot(id).weight);
      f.remove(id);
    }
  }

  ElimStep step;
  step.var = x;
  {
    std::set<Var> neighbors;
    for (const auto& c : bucket.items())
      for (Lit l : c.lits)
        if (l.var() != x) neighbors.insert(l.var());
    step.bucket_width = int(neighbors.size());
  }
  step.bucket_peak = bucket.live();

  std::set<std::vector<std::int32_t>> resolvent_keys;
  std::vector<WeightedClause> saturated;  // check_saturation only
  const Weight top = f.top();
  const Lit lx = Lit::pos(x);

  for (;;) {
    std::size_t pi = bucket.find_min(lx);
    if (pi == detail::Bucket::npos) break;
    WeightedClause popped = bucket.take(pi);
    LitVec a = without_lit(popped.lits, lx);
    Weight u = popped.weight;

    while (u > 0) {
      // smallest clashing negative partner, ties canonical
      std::size_t part = detail::Bucket::npos;
      for (std::size_t i = 0; i < bucket.items().size(); ++i) {
        const auto& c = bucket.items()[i];
        if (c.weight == 0 || !contains_lit(c.lits, ~lx)) continue;
        if (part != detail::Bucket::npos &&
            (c.lits.size() > bucket.items()[part].lits.size() ||
             (c.lits.size() == bucket.items()[part].lits.size() &&
              !clause_less(c.lits, bucket.items()[part].lits))))
          continue;
        if (!detail::clashes(f, bucket, a, without_lit(c.lits, ~lx))) continue;
        part = i;
      }
      if (part == detail::Bucket::npos) break;  // saturated

      const WeightedClause& partner = bucket.items()[part];
      Weight w = partner.weight;
      MaxResParts parts = resolve_parts(popped.lits, u, partner.lits, w, top);
      assert(parts.pivot == x);
      LitVec partner_lits = partner.lits;
      u = ominus(u, parts.m, top);
      bucket.set_weight(part, ominus(w, parts.m, top));
      // posteriors are tracked through u and the partner's weight above;
      // compensation clauses return to the bucket, the resolvent goes to F
      for (auto& c : parts.rest) {
        if (same_lits(c.lits, popped.lits) || same_lits(c.lits, partner_lits))
          continue;
        bucket.add(std::move(c.lits), c.weight);
      }
      std::vector<std::int32_t> key;
      for (Lit l : parts.resolvent.lits) key.push_back(l.dimacs());
      if (resolvent_keys.insert(std::move(key)).second) ++step.new_resolvents;
      f.add(parts.resolvent);

      if (stats) ++stats->resolution_steps;
      step.bucket_peak = std::max(step.bucket_peak, bucket.live() + 1);
      if (f.clause_count() + bucket.live() > opt.clause_cap)
        throw resource_limit_error("max_var_elim: clause cap exceeded");
      if (opt.check_saturation) {
        for (const auto& s : saturated) {
          LitVec sa = without_lit(s.lits, lx);
          for (const auto& c : bucket.items()) {
            if (c.weight == 0 || !contains_lit(c.lits, ~lx)) continue;
            bool still = !detail::clashes(f, bucket, sa, without_lit(c.lits, ~lx));
            assert(still && "saturated clause regained a clashing partner");
            (void)still;
          }
        }
      }
    }
    if (u > 0) {
      // saturated: discard, but remember it for the debug check
      if (opt.check_saturation)
        saturated.push_back(WeightedClause{popped.lits, u});
    }
  }

  if (stats) {
    ++stats->eliminations;
    stats->max_bucket_size = std::max(stats->max_bucket_size, step.bucket_peak);
    stats->max_bucket_width = std::max(stats->max_bucket_width, step.bucket_width);
    stats->max_new_resolvents =
        std::max(stats->max_new_resolvents, step.new_resolvents);
    if (stats->record_steps) stats->steps.push_back(step);
  }
}

// Pure inference: repeatedly simplifies with the basic rules and eliminates
// variables until the formula is variable-free; the remaining (□,u) is the
// optimum, or ⊤ when there is no model.
inline Weight max_dp(WeightedFormula f, const ElimOptions& opt = {},
                     ElimStats* stats = nullptr) {
  std::vector<Var> static_order;
  std::size_t next = 0;
  bool have_order = false;
  for (;;) {
    simplify(f, SimplifyOptions{1, false, false});
    if (f.contradiction() || f.empty()) return f.lower_bound();
    if (f.bloated()) f.compact();

    Var x = 0;
    switch (opt.ordering) {
      case ElimOrdering::min_degree:
        x = select_elim_var(interaction_graph(f));
        break;
      case ElimOrdering::min_fill:
        if (!have_order) {
          static_order = min_fill_order(interaction_graph(f));
          have_order = true;
        }
        while (next < static_order.size() && !f.var_present(static_order[next]))
          ++next;
        x = next < static_order.size() ? static_order[next++] : 0;
        break;
      case ElimOrdering::given:
        for (Var v = 1; v <= f.num_vars() && x == 0; ++v)
          if (f.var_present(v)) x = v;
        break;
    }
    if (x == 0) {
      // variables may appear after simplification rewrites; fall back
      auto vars = f.present_vars();
      if (vars.empty()) return f.lower_bound();
      x = vars.front();
    }
    max_var_elim(f, x, opt, stats);
  }
}

}  // namespace maxres
