// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "resolution.hpp"

namespace maxres {

// Hyper-resolution rules: patterns of unit/binary clauses whose combined
// resolution steps are applied in one shot, plus the implication-graph
// machinery that detects chain patterns.

// Star rule: a clause l1∨…∨lk whose every literal appears negated in a unit
// clause. Derives (□,m) with m = min(w,u1,…,uk).
inline void star_rule(WeightedFormula& f, const LitVec& clause) {
  std::size_t cs = f.find(clause);
  assert(cs != WeightedFormula::npos);
  Weight w = f.slot(cs).weight;
  std::size_t k = clause.size();
  std::vector<std::size_t> unit_slot(k);
  Weight m = w;
  for (std::size_t i = 0; i < k; ++i) {
    unit_slot[i] = f.find(LitVec{~clause[i]});
    assert(unit_slot[i] != WeightedFormula::npos);
    m = std::min(m, f.slot(unit_slot[i]).weight);
  }
  assert(m > 0);
  std::vector<Weight> u(k);
  for (std::size_t i = 0; i < k; ++i) u[i] = f.slot(unit_slot[i]).weight;

  const Weight top = f.top();
  f.remove(cs);
  for (std::size_t i = 0; i < k; ++i) f.remove(unit_slot[i]);

  f.add_clause(clause, ominus(w, m, top));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    LitVec tail(clause.begin() + i + 1, clause.end());
    for (auto& c : cnf_linear(LitVec{~clause[i]}, tail, m)) f.add(c);
  }
  for (std::size_t i = 0; i < k; ++i)
    f.add_clause(LitVec{~clause[i]}, ominus(u[i], m, top));
  f.add_empty_clause(m);
}

// Sum of the weights of clauses containing ~l (the negative side of a
// dominating-unit-clause check). Uncapped.
inline unsigned __int128 negative_occurrence_weight(const WeightedFormula& f,
                                                    Lit l) {
  unsigned __int128 sum = 0;
  for (std::uint32_t id : f.occurrences(l.var())) {
    if (!f.live(id)) continue;
    if (contains_lit(f.slot(id).lits, ~l)) sum += f.slot(id).weight;
  }
  return sum;
}

inline bool duc_applicable(const WeightedFormula& f, Lit l) {
  std::size_t us = f.find(LitVec{l});
  if (us == WeightedFormula::npos) return false;
  Weight u = f.slot(us).weight;
  if (u >= f.top()) return false;
  return u >= negative_occurrence_weight(f, l);
}

// Dominating unit clause: (l,u) with u >= Σ w_j over clauses (l̄∨B_j,w_j).
// Every clause over var(l) is dropped and the stripped (B_j,w_j) remain.
// Preserves the optimum (min-projected over the eliminated variable).
inline void dominating_unit_clause(WeightedFormula& f, Lit l) {
  assert(duc_applicable(f, l));
  std::vector<WeightedClause> stripped;
  std::vector<std::uint32_t> to_remove;
  for (std::uint32_t id : f.occurrences(l.var())) {
    if (!f.live(id)) continue;
    const LitVec& lits = f.slot(id).lits;
    if (const Lit* at = find_var(lits, l.var())) {
      to_remove.push_back(id);
      if (*at == ~l)
        stripped.push_back(WeightedClause{without_lit(lits, ~l),
                                          f.slot(id).weight});
    }
  }
  for (std::uint32_t id : to_remove) f.remove(id);
  for (auto& c : stripped) f.add_canonical(std::move(c.lits), c.weight);
}

// Chain resolution over l1,…,lk: consumes (l1,u1), the binary links
// (l̄i∨li+1,ui+1) and (l̄k,uk+1); derives (□, min of all).
inline void chain_resolution(WeightedFormula& f, const std::vector<Lit>& chain) {
  const std::size_t k = chain.size();
  assert(k >= 1);
  const Weight top = f.top();

  std::vector<std::size_t> slots;  // unit, k-1 binaries, end unit
  std::vector<Weight> u(k + 2);    // u[1..k+1]
  slots.push_back(f.find(LitVec{chain[0]}));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    LitVec link{~chain[i], chain[i + 1]};
    canonicalize(link);
    slots.push_back(f.find(link));
  }
  slots.push_back(f.find(LitVec{~chain[k - 1]}));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    assert(slots[i] != WeightedFormula::npos && "chain clause missing");
    u[i + 1] = f.slot(slots[i]).weight;
  }
  std::vector<Weight> m(k + 2);  // prefix minima m[1..k+1]
  m[1] = u[1];
  for (std::size_t i = 2; i <= k + 1; ++i) m[i] = std::min(m[i - 1], u[i]);
  assert(m[k + 1] > 0);

  for (std::size_t s : slots) f.remove(s);
  for (std::size_t i = 1; i <= k; ++i)
    f.add_clause(LitVec{chain[i - 1]}, ominus(m[i], m[i + 1], top));
  for (std::size_t i = 1; i < k; ++i) {
    f.add_clause(LitVec{~chain[i - 1], chain[i]}, ominus(u[i + 1], m[i + 1], top));
    f.add_clause(LitVec{chain[i - 1], ~chain[i]}, m[i + 1]);
  }
  f.add_clause(LitVec{~chain[k - 1]}, ominus(u[k + 1], m[k + 1], top));
  f.add_empty_clause(m[k + 1]);
}

// Cycle resolution over l1,…,lk (k >= 3): consumes (l̄i∨li+1,ui) for i<k and
// (l̄1∨l̄k,uk); derives the unit (l̄1, mk). Compensation ternaries are kept
// as produced.
inline void cycle_resolution(WeightedFormula& f, const std::vector<Lit>& cyc) {
  const std::size_t k = cyc.size();
  assert(k >= 3);
  const Weight top = f.top();

  std::vector<std::size_t> slots(k);
  std::vector<Weight> u(k + 1);
  for (std::size_t i = 1; i < k; ++i) {
    LitVec link{~cyc[i - 1], cyc[i]};
    canonicalize(link);
    slots[i - 1] = f.find(link);
  }
  {
    LitVec closing{~cyc[0], ~cyc[k - 1]};
    canonicalize(closing);
    slots[k - 1] = f.find(closing);
  }
  for (std::size_t i = 0; i < k; ++i) {
    assert(slots[i] != WeightedFormula::npos && "cycle clause missing");
    u[i + 1] = f.slot(slots[i]).weight;
  }
  std::vector<Weight> m(k + 1);
  m[1] = u[1];
  for (std::size_t i = 2; i <= k; ++i) m[i] = std::min(m[i - 1], u[i]);
  assert(m[k] > 0);

  for (std::size_t s : slots) f.remove(s);
  for (std::size_t i = 2; i <= k; ++i)
    f.add_clause(LitVec{~cyc[0], cyc[i - 1]}, ominus(m[i - 1], m[i], top));
  for (std::size_t i = 2; i < k; ++i) {
    f.add_clause(LitVec{~cyc[i - 1], cyc[i]}, ominus(u[i], m[i], top));
    f.add_clause(LitVec{~cyc[0], cyc[i - 1], ~cyc[i]}, m[i]);
    f.add_clause(LitVec{cyc[0], ~cyc[i - 1], cyc[i]}, m[i]);
  }
  f.add_clause(LitVec{~cyc[0], ~cyc[k - 1]}, ominus(u[k], m[k], top));
  f.add_clause(LitVec{~cyc[0]}, m[k]);
}

// Implication graph over the live unit/binary structure: two vertices per
// variable; each binary clause (li∨lj,u) contributes the complementary arcs
// (l̄i→lj) and (l̄j→li); a unit clause (l,u) makes vertex l starting and
// vertex l̄ ending.
struct ImplicationGraph {
  struct Arc {
    int from = 0, to = 0;
    int mate = 0;  // index of the complementary arc
  };

  Var num_vars = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // per vertex, arc indices
  std::vector<char> starting, ending;

  static int vertex(Lit l) { return 2 * (l.var() - 1) + (l.positive() ? 1 : 0); }
  static Lit lit_of(int v) {
    Var var = Var(v / 2) + 1;
    return (v & 1) ? Lit::pos(var) : Lit::neg(var);
  }
  int vertex_count() const { return 2 * num_vars; }

  bool has_arc(Lit a, Lit b) const {
    for (int ai : out[vertex(a)])
      if (arcs[ai].to == vertex(b)) return true;
    return false;
  }
};

inline ImplicationGraph build_implication_graph(const WeightedFormula& f) {
  ImplicationGraph g;
  g.num_vars = f.num_vars();
  g.out.resize(g.vertex_count());
  g.starting.assign(g.vertex_count(), 0);
  g.ending.assign(g.vertex_count(), 0);
  f.for_each_clause([&](const WeightedFormula::Slot& s) {
    if (s.lits.size() == 1) {
      Lit l = s.lits.front();
      g.starting[ImplicationGraph::vertex(l)] = 1;
      g.ending[ImplicationGraph::vertex(~l)] = 1;
    } else if (s.lits.size() == 2) {
      Lit li = s.lits[0], lj = s.lits[1];
      int a = int(g.arcs.size());
      g.arcs.push_back({ImplicationGraph::vertex(~li),
                        ImplicationGraph::vertex(lj), a + 1});
      g.arcs.push_back({ImplicationGraph::vertex(~lj),
                        ImplicationGraph::vertex(li), a});
      g.out[g.arcs[a].from].push_back(a);
      g.out[g.arcs[a + 1].from].push_back(a + 1);
    }
  });
  return g;
}

// Start-to-end literal path usable by chain_resolution: shortest paths
// (Dijkstra, unit arc weights) from each starting vertex in turn; a path is
// valid if it uses no pair of complementary arcs and repeats no variable.
// Incomplete by design: only the one shortest path per vertex pair is probed.
inline std::optional<std::vector<Lit>> detect_chain(const ImplicationGraph& g) {
  const int n = g.vertex_count();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent_arc(n);
  for (int s = 0; s < n; ++s) {
    if (!g.starting[s]) continue;
    dist.assign(n, kInf);
    parent_arc.assign(n, -1);
    dist[s] = 0;
    using Entry = std::pair<int, int>;  // (dist, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (int ai : g.out[v]) {
        int to = g.arcs[ai].to;
        if (d + 1 < dist[to]) {
          dist[to] = d + 1;
          parent_arc[to] = ai;
          pq.push({d + 1, to});
        }
      }
    }
    for (int e = 0; e < n; ++e) {
      if (!g.ending[e] || e == s || dist[e] == kInf) continue;
      std::vector<int> path_arcs;
      for (int v = e; v != s;) {
        path_arcs.push_back(parent_arc[v]);
        v = g.arcs[parent_arc[v]].from;
      }
      std::reverse(path_arcs.begin(), path_arcs.end());
      bool ok = true;
      for (std::size_t i = 0; i < path_arcs.size() && ok; ++i)
        for (std::size_t j = i + 1; j < path_arcs.size() && ok; ++j)
          if (g.arcs[path_arcs[i]].mate == path_arcs[j]) ok = false;
      if (!ok) continue;
      std::vector<Lit> lits{ImplicationGraph::lit_of(s)};
      for (int ai : path_arcs) lits.push_back(ImplicationGraph::lit_of(g.arcs[ai].to));
      std::vector<char> seen(g.num_vars + 1, 0);
      for (Lit l : lits) {
        if (seen[l.var()]) {
          ok = false;
          break;
        }
        seen[l.var()] = 1;
      }
      if (ok) return lits;
    }
  }
  return std::nullopt;
}

}  // namespace maxres
