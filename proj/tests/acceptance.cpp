// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is pinned here; all comparisons are exact.

#include <maxres/maxres.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support/sat_oracle.hpp"

using namespace maxres;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("criterion %d %-22s %s  (%s)\n", criterion, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// fixed-order parallel map over instance indices (independent solves only)
void parallel_for(int total, const std::function<void(int)>& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

LitVec lits(std::initializer_list<int> ds) {
  LitVec out;
  for (int d : ds) out.push_back(Lit(d));
  return out;
}

// random instance in the criterion-1 family: k ∈ {2,3}, n ∈ [5,14],
// m ∈ [n,6n], unit or mixed weights, ~20% hard clauses
WeightedFormula c1_instance(int index) {
  Rng rng(5000 + std::uint64_t(index));
  int k = 2 + index % 2;
  Var n = 5 + Var(rng.below(10));
  int m = int(n + Var(rng.below(std::uint64_t(5 * n + 1))));
  bool mixed = (index / 2) % 2;

  std::vector<LitVec> cls;
  std::vector<Weight> w;
  std::vector<char> used(n + 1, 0);
  unsigned __int128 soft_sum = 0;
  std::vector<char> hard(m, 0);
  for (int i = 0; i < m; ++i) {
    LitVec c;
    while (int(c.size()) < k) {
      Var v = Var(rng.below(std::uint64_t(n))) + 1;
      if (used[v]) continue;
      used[v] = 1;
      c.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    }
    for (Lit l : c) used[l.var()] = 0;
    cls.push_back(std::move(c));
    Weight wi = mixed ? 1 + Weight(rng.below(4)) : 1;
    hard[i] = rng.below(100) < 20;
    if (!hard[i]) soft_sum += wi;
    w.push_back(wi);
  }
  Weight top = Weight(soft_sum) + 1;
  WeightedFormula f(n, top);
  for (int i = 0; i < m; ++i) f.add_clause(cls[i], hard[i] ? top : w[i]);
  return f;
}

void criterion1() {
  auto t0 = Clock::now();
  const int kInstances = 200;
  std::vector<char> ok(kInstances, 1);
  parallel_for(kInstances, [&](int i) {
    WeightedFormula f = c1_instance(i);
    Weight want = brute_force_opt(f, 14).optimum;
    for (int level = 1; level <= 4; ++level) {
      SolverConfig cfg;
      cfg.level = level;
      if (max_dpll(f, cfg).optimum != want) ok[i] = 0;
    }
    if (max_dp(f) != want) ok[i] = 0;
  });
  int passed = int(std::count(ok.begin(), ok.end(), 1));
  double dt = seconds_since(t0);
  std::ostringstream detail;
  detail << passed << "/" << kInstances
         << " instances agree with the oracle at levels 1-4 and via max_dp, "
         << dt << " s";
  report(1, "oracle-equivalence", passed == kInstances && dt < 60.0,
         detail.str());
}

// ---------------------------------------------------------------------------
// criterion 2: rule soundness

std::vector<Var> union_vars(const WeightedFormula& a, const WeightedFormula& b) {
  std::vector<Var> va = a.present_vars(), vb = b.present_vars(), out;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(),
                 std::back_inserter(out));
  return out;
}

bool tables_equal(const WeightedFormula& a, const WeightedFormula& b) {
  auto vars = union_vars(a, b);
  return per_assignment_table(a, vars) == per_assignment_table(b, vars);
}

bool tables_equal_min_projected(const WeightedFormula& before,
                                const WeightedFormula& after) {
  auto vb = before.present_vars();
  CostTable tb = per_assignment_table(before, vb);
  auto va = after.present_vars();
  for (Var v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) tb = min_project(tb, v);
  return tb == per_assignment_table(after, tb.vars);
}

WeightedFormula c2_random(Rng& rng, Var n, int m, Weight top, int max_arity,
                          int hard_percent) {
  WeightedFormula f(n, top);
  for (int i = 0; i < m; ++i) {
    int arity = 1 + int(rng.below(std::uint64_t(std::min<int>(max_arity, n))));
    LitVec c;
    std::vector<char> used(n + 1, 0);
    while (int(c.size()) < arity) {
      Var v = Var(rng.below(std::uint64_t(n))) + 1;
      if (used[v]) continue;
      used[v] = 1;
      c.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    }
    Weight w =
        rng.below(100) < std::uint64_t(hard_percent) ? top : 1 + Weight(rng.below(4));
    f.add_clause(std::move(c), w);
  }
  return f;
}

Lit random_lit(Rng& rng, Var n) {
  Var v = 1 + Var(rng.below(std::uint64_t(n)));
  return rng.coin() ? Lit::pos(v) : Lit::neg(v);
}

void criterion2() {
  auto t0 = Clock::now();
  const int kPerRule = 100;
  const Var n = 8;
  std::vector<std::pair<const char*, int>> failures;
  auto run_rule = [&](const char* name,
                      const std::function<bool(Rng&)>& one_instance) {
    Rng rng(std::hash<std::string>{}(name));
    int bad = 0;
    for (int i = 0; i < kPerRule; ++i)
      if (!one_instance(rng)) ++bad;
    if (bad) failures.push_back({name, bad});
  };

  run_rule("aggregation", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 10, 12, 3, 20);
    auto cs = f.canonical_clauses();
    if (cs.empty()) return true;
    auto c = cs[std::size_t(rng.below(cs.size()))];
    if (c.weight < 2) return true;
    WeightedFormula g(n, 12);
    for (auto& cc : cs)
      if (!same_lits(cc.lits, c.lits)) g.add(cc);
    g.add_clause(c.lits, c.weight - 1);
    g.add_clause(c.lits, 1);
    return tables_equal(f, g);
  });

  run_rule("absorption", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 8, 12, 2, 20);
    // plant a mandatory clause and a superset of it
    LitVec base{random_lit(rng, n)};
    f.add_clause(base, 12);
    LitVec super = base;
    Lit extra = random_lit(rng, n);
    if (extra.var() != base[0].var()) super.push_back(extra);
    f.add_clause(super, 1 + Weight(rng.below(4)));
    WeightedFormula g = f;
    g.absorb();
    return tables_equal(f, g);
  });

  run_rule("hardening", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 8, 12, 3, 10);
    f.add_empty_clause(1 + rng.below(6));
    WeightedFormula g = f;
    g.harden();
    return tables_equal(f, g);
  });

  run_rule("unit-clause-reduction", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 8, 12, 3, 20);
    Lit l = random_lit(rng, n);
    f.add_clause(LitVec{l}, 12);
    LitVec other{~l};
    Lit extra = random_lit(rng, n);
    if (extra.var() != l.var()) other.push_back(extra);
    canonicalize(other);
    f.add_clause(other, 1 + Weight(rng.below(4)));
    Weight w = f.weight_of(other);
    if (w == 0 || w == 12) return true;  // aggregated into something else
    WeightedFormula g = f;
    max_res(g, LitVec{l}, other);
    return tables_equal(f, g);
  });

  run_rule("pure-literal", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 8, 12, 3, 20);
    WeightedFormula g = f;
    g.pure_literal();
    return tables_equal_min_projected(f, g);
  });

  run_rule("neighborhood", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 6, 12, 2, 20);
    Lit l = random_lit(rng, n);
    Lit a = random_lit(rng, n);
    LitVec c1{l}, c2{~l};
    if (a.var() != l.var()) {
      c1.push_back(a);
      c2.push_back(a);
    }
    canonicalize(c1);
    canonicalize(c2);
    f.add_clause(c1, 1 + Weight(rng.below(4)));
    f.add_clause(c2, 1 + Weight(rng.below(4)));
    if (f.weight_of(c1) == 0 || f.weight_of(c2) == 0) return true;
    WeightedFormula g = f;
    neighborhood_res(g, c1, c2);
    return tables_equal(f, g);
  });

  run_rule("max-res", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 10, 12, 3, 20);
    auto cs = f.canonical_clauses();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        Var pivot = 0;
        bool taut = false;
        for (Lit l : cs[i].lits)
          if (const Lit* o = find_var(cs[j].lits, l.var()); o && *o == ~l) {
            if (pivot) taut = true;
            pivot = l.var();
          }
        if (!pivot || taut) continue;
        WeightedFormula g = f;
        max_res(g, cs[i].lits, cs[j].lits);
        return tables_equal(f, g);
      }
    return true;  // no clashing pair drawn
  });

  run_rule("cnf-recovery", [&](Rng& rng) {
    // semantic negation cost vs emitted clause sets, both forms
    std::vector<char> used(n + 1, 0);
    auto draw = [&] {
      for (;;) {
        Var v = 1 + Var(rng.below(std::uint64_t(n)));
        if (used[v]) continue;
        used[v] = 1;
        return rng.coin() ? Lit::pos(v) : Lit::neg(v);
      }
    };
    LitVec negated, prefix;
    int arity = 1 + int(rng.below(4));
    for (int i = 0; i < arity; ++i) negated.push_back(draw());
    int plen = int(rng.below(3));
    for (int i = 0; i < plen; ++i) prefix.push_back(draw());
    canonicalize(negated);
    canonicalize(prefix);
    Weight u = 1 + Weight(rng.below(5));
    for (bool linear : {false, true}) {
      auto out = linear ? cnf_linear(prefix, negated, u)
                        : cnf_recover(prefix, negated, u);
      WeightedFormula enc(n, 30);
      for (auto& c : out) enc.add(c);
      std::vector<Var> vars;
      for (Lit l : prefix) vars.push_back(l.var());
      for (Lit l : negated) vars.push_back(l.var());
      std::sort(vars.begin(), vars.end());
      auto table = per_assignment_table(enc, vars);
      for (std::uint64_t mask = 0; mask < table.cost.size(); ++mask) {
        Assignment a(n);
        for (std::size_t b = 0; b < vars.size(); ++b)
          a.set(vars[b], (mask >> b) & 1);
        Weight want = 0;
        bool pre_sat = false;
        for (Lit l : prefix) pre_sat |= a.satisfies(l);
        if (!pre_sat)
          for (Lit l : negated)
            if (a.satisfies(l)) want = u;
        if (table.cost[mask] != want) return false;
      }
    }
    return true;
  });

  run_rule("star", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 5, 20, 2, 10);
    int k = 2 + int(rng.below(2));
    LitVec clause;
    for (Var v = 1; v <= Var(k); ++v)
      clause.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    f.add_clause(clause, 1 + Weight(rng.below(4)));
    for (Lit l : clause) f.add_clause(LitVec{~l}, 1 + Weight(rng.below(4)));
    canonicalize(clause);
    WeightedFormula g = f;
    star_rule(g, clause);
    return tables_equal(f, g);
  });

  run_rule("chain", [&](Rng& rng) {
    int k = 1 + int(rng.below(4));
    WeightedFormula f = c2_random(rng, n, 4, 20, 2, 10);
    std::vector<Lit> chain;
    for (Var v = 1; v <= Var(k); ++v)
      chain.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    f.add_clause(LitVec{chain[0]}, 1 + Weight(rng.below(4)));
    for (int i = 0; i + 1 < k; ++i)
      f.add_clause(LitVec{~chain[i], chain[i + 1]}, 1 + Weight(rng.below(4)));
    f.add_clause(LitVec{~chain[k - 1]}, 1 + Weight(rng.below(4)));
    WeightedFormula g = f;
    chain_resolution(g, chain);
    return tables_equal(f, g);
  });

  run_rule("cycle", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 4, 20, 2, 10);
    std::vector<Lit> cyc;
    for (Var v = 1; v <= 3; ++v)
      cyc.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    f.add_clause(LitVec{~cyc[0], cyc[1]}, 1 + Weight(rng.below(4)));
    f.add_clause(LitVec{~cyc[1], cyc[2]}, 1 + Weight(rng.below(4)));
    f.add_clause(LitVec{~cyc[0], ~cyc[2]}, 1 + Weight(rng.below(4)));
    WeightedFormula g = f;
    cycle_resolution(g, cyc);
    return tables_equal(f, g);
  });

  run_rule("dominating-unit-clause", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 6, 30, 2, 10);
    f.add_clause(LitVec{random_lit(rng, n)}, 6 + Weight(rng.below(6)));
    for (Var v = 1; v <= n; ++v)
      for (Lit l : {Lit::neg(v), Lit::pos(v)})
        if (duc_applicable(f, l)) {
          WeightedFormula g = f;
          dominating_unit_clause(g, l);
          return tables_equal_min_projected(f, g);
        }
    return true;
  });

  run_rule("max-var-elim", [&](Rng& rng) {
    WeightedFormula f = c2_random(rng, n, 10, 15, 3, 20);
    Var x = 1 + Var(rng.below(std::uint64_t(n)));
    WeightedFormula g = f;
    max_var_elim(g, x);
    return tables_equal_min_projected(f, g);
  });

  std::ostringstream detail;
  detail << "13 rules x " << kPerRule
         << " applicable instances, per-assignment tables identical";
  if (!failures.empty()) {
    detail.str("");
    for (auto& [name, bad] : failures) detail << name << ":" << bad << " bad ";
  }
  detail << ", " << seconds_since(t0) << " s";
  report(2, "rule-soundness", failures.empty(), detail.str());
}

// ---------------------------------------------------------------------------
// criterion 3: paper worked examples, exact values

bool formula_is(const WeightedFormula& f,
                std::vector<std::pair<std::vector<int>, Weight>> want,
                Weight lb) {
  if (f.lower_bound() != lb) return false;
  if (f.clause_count() != want.size()) return false;
  for (auto& [ds, w] : want) {
    LitVec c;
    for (int d : ds) c.push_back(Lit(d));
    canonicalize(c);
    if (f.weight_of(c) != w) return false;
  }
  return true;
}

void criterion3() {
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  auto check = [&](bool ok, const char* what) {
    if (!ok) bad.push_back(what);
  };

  // 3⊕8 = ⊤ at ⊤ = 10
  check(oplus(3, 8, 10) == 10, "oplus(3,8,10)");

  // simplification chain ends at optimum 6
  {
    WeightedFormula f(2, 10);
    f.add_clause(lits({1}), 10);
    f.add_clause(lits({-1}), 3);
    f.add_clause(lits({2}), 8);
    f.add_clause(lits({-1, -2}), 3);
    WeightedFormula g = f;
    simplify(g, SimplifyOptions{1, false, false});
    check(g.empty() && g.lower_bound() == 6, "simplify chain -> (\xE2\x96\xA1,6)");
    check(max_dpll(f).optimum == 6, "max_dpll == 6");
    check(max_dp(f) == 6, "max_dp == 6");
  }

  // Max-RES example: exactly the three stated clauses
  {
    WeightedFormula f(3, 100);
    f.add_clause(lits({1, 2}), 3);
    f.add_clause(lits({-1, 2, 3}), 4);
    max_res(f, lits({1, 2}), lits({-1, 2, 3}));
    check(formula_is(f, {{{2, 3}, 3}, {{-1, 2, 3}, 1}, {{1, 2, -3}, 3}}, 0),
          "max_res worked example");
  }

  // neighborhood resolution chain reaches (□,1)
  {
    WeightedFormula f(2, 10);
    f.add_clause(lits({2, 1}), 1);
    f.add_clause(lits({-1, 2}), 1);
    f.add_clause(lits({-2}), 1);
    neighborhood_res(f, lits({1, 2}), lits({-1, 2}));
    neighborhood_res(f, lits({2}), lits({-2}));
    check(formula_is(f, {}, 1), "neighborhood chain -> (\xE2\x96\xA1,1)");
  }

  // chain resolution example: the stated six-clause result
  {
    WeightedFormula f(3, 1000);
    f.add_clause(lits({1}), 2);
    f.add_clause(lits({-1, 2}), 1);
    f.add_clause(lits({-2, 3}), 1000);
    f.add_clause(lits({-3}), 2);
    chain_resolution(f, {Lit(1), Lit(2), Lit(3)});
    check(formula_is(f,
                     {{{1}, 1}, {{1, -2}, 1}, {{2, -3}, 1}, {{-2, 3}, 1000},
                      {{-3}, 1}},
                     1),
          "chain resolution example");
  }

  // cycle example: derives (x3,1), then chain resolution reaches (□,1)
  {
    WeightedFormula f(5, 10);
    f.add_clause(lits({1, 2}), 1);
    f.add_clause(lits({-1, 3}), 1);
    f.add_clause(lits({-2, 3}), 1);
    f.add_clause(lits({-3, -4}), 1);
    f.add_clause(lits({4, 5}), 1);
    f.add_clause(lits({-5}), 1);
    cycle_resolution(f, {Lit(-3), Lit(-2), Lit(1)});
    check(f.weight_of(lits({3})) == 1, "cycle derives (x3,1)");
    chain_resolution(f, {Lit(3), Lit(-4), Lit(5)});
    check(formula_is(f,
                     {{{1, 2, -3}, 1}, {{-1, -2, 3}, 1}, {{3, 4}, 1},
                      {{-4, -5}, 1}},
                     1),
          "cycle+chain -> (\xE2\x96\xA1,1)");
  }

  // induced width of the example graph along the lexicographic order
  {
    WeightedFormula f(5, 7);
    f.add_clause(lits({-1, 4}), 1);
    f.add_clause(lits({1, 4}), 1);
    f.add_clause(lits({2, 3}), 1);
    f.add_clause(lits({2, 4}), 1);
    f.add_clause(lits({2, -5}), 1);
    f.add_clause(lits({4, 5}), 1);
    auto order = induced_width(interaction_graph(f), {1, 2, 3, 4, 5});
    check(order.induced_width == 2 && order.added_edges.size() == 1 &&
              order.added_edges[0] == std::pair<Var, Var>{1, 2},
          "induced width example");
  }

  // vertex-cover instance optimum
  {
    WeightedFormula f(5, 6);
    for (Var v = 1; v <= 5; ++v) f.add_clause(LitVec{Lit::neg(v)}, 1);
    for (auto [u, v] : {std::pair<int, int>{1, 4},
                        {2, 3},
                        {2, 4},
                        {2, 5},
                        {4, 5}})
      f.add_clause(LitVec{Lit::pos(u), Lit::pos(v)}, 6);
    for (int level = 1; level <= 4; ++level) {
      SolverConfig cfg;
      cfg.level = level;
      check(max_dpll(f, cfg).optimum == 2, "vertex cover optimum");
    }
    check(max_dp(f) == 2, "vertex cover via max_dp");
  }

  std::ostringstream detail;
  if (bad.empty())
    detail << "all worked examples exact";
  else
    for (auto& b : bad) detail << b << "; ";
  detail << ", " << seconds_since(t0) << " s";
  report(3, "worked-examples", bad.empty(), detail.str());
}

// ---------------------------------------------------------------------------
// criterion 4: SAT degeneration at top = 1

void criterion4() {
  auto t0 = Clock::now();

  // cross-validate the independent DPLL oracle against exhaustive
  // enumeration before trusting it at n = 30
  int cross_bad = 0;
  for (int i = 0; i < 200; ++i) {
    Var n = 5 + Var(i % 10);
    WeightedFormula f = gen_random_ksat(3, n, int(4 * n), 9000 + i);
    std::vector<std::vector<int>> cls;
    f.for_each_clause([&](const WeightedFormula::Slot& s) {
      std::vector<int> c;
      for (Lit l : s.lits) c.push_back(l.dimacs());
      cls.push_back(c);
    });
    WeightedFormula hard(n, 1);
    f.for_each_clause(
        [&](const WeightedFormula::Slot& s) { hard.add_clause(s.lits, 1); });
    bool sat_enum = brute_force_opt(hard, 14).optimum == 0;
    if (satcheck::satisfiable(n, cls) != sat_enum) ++cross_bad;
  }

  const int kInstances = 50;
  std::vector<char> ok(kInstances, 1);
  parallel_for(kInstances, [&](int i) {
    const Var n = 30;
    const int m = 128;  // ≈ 4.25 n
    WeightedFormula base = gen_random_ksat(3, n, m, 9500 + std::uint64_t(i));
    WeightedFormula f(n, 1);
    std::vector<std::vector<int>> cls;
    base.for_each_clause([&](const WeightedFormula::Slot& s) {
      f.add_clause(s.lits, 1);
      std::vector<int> c;
      for (Lit l : s.lits) c.push_back(l.dimacs());
      cls.push_back(c);
    });
    bool sat = satcheck::satisfiable(n, cls);
    Weight got = max_dpll(f).optimum;
    if (got != (sat ? 0u : 1u)) ok[i] = 0;
  });
  int passed = int(std::count(ok.begin(), ok.end(), 1));

  // max_dp agreement on n <= 14
  int dp_bad = 0;
  for (int i = 0; i < 50; ++i) {
    Var n = 8 + Var(i % 7);
    WeightedFormula base = gen_random_ksat(3, n, int(4.25 * n), 9800 + i);
    WeightedFormula f(n, 1);
    base.for_each_clause(
        [&](const WeightedFormula::Slot& s) { f.add_clause(s.lits, 1); });
    if (max_dp(f) != brute_force_opt(f, 14).optimum) ++dp_bad;
  }

  std::ostringstream detail;
  detail << "oracle cross-validation " << 200 - cross_bad << "/200, n=30 "
         << passed << "/" << kInstances << ", max_dp " << 50 - dp_bad
         << "/50, " << seconds_since(t0) << " s";
  report(4, "sat-degeneration", cross_bad == 0 && passed == kInstances &&
                                    dp_bad == 0,
         detail.str());
}

// ---------------------------------------------------------------------------
// criterion 5: inference-level node-count trend

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

void criterion5() {
  auto t0 = Clock::now();
  const int kInstances = 30;
  std::vector<std::array<std::uint64_t, 5>> nodes(kInstances);
  std::vector<char> agree(kInstances, 1);
  parallel_for(kInstances, [&](int i) {
    WeightedFormula f = gen_random_ksat(2, 40, 300, 7000 + std::uint64_t(i));
    Weight results[5];
    for (int level = 1; level <= 4; ++level) {
      SolverConfig cfg;
      cfg.level = level;
      auto r = max_dpll(f, cfg);
      nodes[i][level] = r.stats.nodes;
      results[level] = r.optimum;
    }
    for (int level = 2; level <= 4; ++level)
      if (results[level] != results[1]) agree[i] = 0;
  });

  std::vector<std::uint64_t> l1, l2, l3, l4;
  int monotone[4] = {0, 0, 0, 0};
  for (int i = 0; i < kInstances; ++i) {
    l1.push_back(nodes[i][1]);
    l2.push_back(nodes[i][2]);
    l3.push_back(nodes[i][3]);
    l4.push_back(nodes[i][4]);
    for (int level = 1; level < 4; ++level)
      if (nodes[i][level + 1] <= nodes[i][level]) ++monotone[level];
  }
  std::uint64_t m1 = median(l1), m2 = median(l2), m3 = median(l3),
                m4 = median(l4);
  bool chain_ok = m4 <= m3 && 5 * m3 <= m2 && 10 * m2 <= m1;
  bool optima_ok = std::count(agree.begin(), agree.end(), 1) == kInstances;
  // module invariant: per-level node counts non-increasing on >= 90%
  bool monotone_ok = monotone[1] >= 27 && monotone[2] >= 27 && monotone[3] >= 27;

  std::ostringstream detail;
  detail << "median nodes L1=" << m1 << " L2=" << m2 << " L3=" << m3
         << " L4=" << m4 << ", pairwise monotone " << monotone[1] << "/"
         << monotone[2] << "/" << monotone[3] << " of 30, "
         << seconds_since(t0) << " s";
  report(5, "inference-level-trend", chain_ok && optima_ok && monotone_ok,
         detail.str());
}

// ---------------------------------------------------------------------------
// criterion 6: Max-DP on path-structured formulas

void criterion6() {
  auto t0 = Clock::now();
  const Var n = 1000;
  WeightedFormula f(n, Weight(2 * n));
  for (Var v = 1; v <= n; ++v) f.add_clause(LitVec{Lit::pos(v)}, 1);
  for (Var v = 1; v < n; ++v)
    f.add_clause(LitVec{Lit::neg(v), Lit::pos(v + 1)}, 1);

  ElimStats stats;
  stats.record_steps = true;
  auto solve_start = Clock::now();
  Weight opt = max_dp(f, ElimOptions{}, &stats);
  double solve_time = seconds_since(solve_start);

  bool bounds_ok = true;
  for (const auto& step : stats.steps) {
    if (step.bucket_peak > 6) bounds_ok = false;       // 2·3^1
    if (step.new_resolvents > 3) bounds_ok = false;    // 3^1
  }
  // the same structure at oracle size gives the same per-variable answer
  WeightedFormula small(12, 24);
  for (Var v = 1; v <= 12; ++v) small.add_clause(LitVec{Lit::pos(v)}, 1);
  for (Var v = 1; v < 12; ++v)
    small.add_clause(LitVec{Lit::neg(v), Lit::pos(v + 1)}, 1);
  bool small_ok = max_dp(small) == brute_force_opt(small).optimum;

  std::ostringstream detail;
  detail << "n=1000 solved in " << solve_time << " s, optimum " << opt
         << ", bucket peak <= 6 and resolvents <= 3 per elimination, "
         << seconds_since(t0) << " s";
  report(6, "dp-structural", solve_time < 1.0 && bounds_ok && small_ok,
         detail.str());
}

// ---------------------------------------------------------------------------
// criterion 7: simplify termination

void criterion7() {
  auto t0 = Clock::now();
  // the formula on which unrestricted Max-RES cycles
  WeightedFormula cyc(3, 3);
  cyc.add_clause(lits({1, 2}), 1);
  cyc.add_clause(lits({-1, 3}), 1);
  WeightedFormula cyc2 = cyc;
  simplify(cyc2, SimplifyOptions{4, false, false});
  bool cyc_ok = cyc2.same_instance(cyc);

  int bad = 0;
  Rng rng(7700);
  for (int i = 0; i < 1000; ++i) {
    Var n = 4 + Var(rng.below(12));
    int m = int(n) + int(rng.below(std::uint64_t(4 * n)));
    WeightedFormula f = c2_random(rng, n, m, 2 * Weight(m) + 1, 3, 20);
    std::uint64_t budget = 10 * (std::uint64_t(m) + std::uint64_t(n));
    SolveStats stats;
    SimplifyOptions opt{4, i % 3 == 0, i % 5 == 0};
    simplify(f, opt, &stats);
    if (stats.max_simplify_iterations > budget) ++bad;
    // fixpoint: a second run must not change anything
    WeightedFormula g = f;
    simplify(g, opt, &stats);
    if (!g.same_instance(f)) ++bad;
  }
  std::ostringstream detail;
  detail << "cycling formula is a fixpoint: " << (cyc_ok ? "yes" : "no")
         << ", 1000 random instances within 10(m+n) iterations, "
         << seconds_since(t0) << " s";
  report(7, "termination", cyc_ok && bad == 0, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 8: encoder correctness against combinatorial brute force

void criterion8() {
  auto t0 = Clock::now();
  int bad_vc = 0, bad_clique = 0, bad_cut = 0, bad_one = 0, bad_auction = 0;

  for (int i = 0; i < 50; ++i) {
    Rng rng(8100 + std::uint64_t(i));
    Var n = 5 + Var(rng.below(4));
    std::size_t max_e = std::size_t(n) * (n - 1) / 2;
    std::size_t e = 2 + rng.below(max_e - 1);
    Graph g = gen_random_graph(n, e, 8200 + std::uint64_t(i));
    std::set<std::pair<Var, Var>> edges(g.edges.begin(), g.edges.end());

    int best_cover = n, best_cut = 0, best_clique = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      bool covers = true, clique = true;
      int cut = 0;
      for (auto [u, v] : g.edges) {
        bool bu = (mask >> (u - 1)) & 1, bv = (mask >> (v - 1)) & 1;
        covers &= bu || bv;
        cut += bu != bv;
      }
      for (Var u = 1; u <= n && clique; ++u)
        for (Var v = u + 1; v <= n && clique; ++v)
          if (((mask >> (u - 1)) & 1) && ((mask >> (v - 1)) & 1))
            clique &= edges.count({u, v}) != 0;
      if (covers) best_cover = std::min(best_cover, int(std::popcount(mask)));
      best_cut = std::max(best_cut, cut);
      if (clique) best_clique = std::max(best_clique, int(std::popcount(mask)));
    }

    if (max_dpll(encode_vertex_cover(g)).optimum != Weight(best_cover))
      ++bad_vc;
    if (Weight(g.edges.size()) - max_dpll(encode_max_cut(g)).optimum !=
        Weight(best_cut))
      ++bad_cut;
    if (Weight(n) - max_dpll(encode_max_clique(g)).optimum !=
        Weight(best_clique))
      ++bad_clique;
  }

  for (int i = 0; i < 50; ++i) {
    Var n = 6 + Var(i % 6);
    WeightedFormula base = gen_random_ksat(3, n, int(3 * n), 8400 + i);
    CnfFormula cnf;
    cnf.n = n;
    base.for_each_clause(
        [&](const WeightedFormula::Slot& s) { cnf.clauses.push_back(s.lits); });
    int best_ones = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      bool model = true;
      for (const auto& c : cnf.clauses) {
        bool sat = false;
        for (Lit l : c) sat |= l.positive() == bool((mask >> (l.var() - 1)) & 1);
        if (!sat) {
          model = false;
          break;
        }
      }
      if (model) best_ones = std::max(best_ones, int(std::popcount(mask)));
    }
    auto enc = encode_max_one(cnf);
    Weight got = max_dpll(enc).optimum;
    Weight want = best_ones < 0 ? enc.top() : Weight(int(n) - best_ones);
    if (got != want) ++bad_one;
  }

  for (int i = 0; i < 50; ++i) {
    Rng rng(8600 + std::uint64_t(i));
    AuctionInstance a;
    a.goods = 3 + int(rng.below(4));
    int bids = 4 + int(rng.below(5));
    unsigned __int128 total = 0;
    for (int b = 0; b < bids; ++b) {
      AuctionInstance::Bid bid;
      bid.value = 1 + Weight(rng.below(9));
      total += bid.value;
      int want_goods = 1 + int(rng.below(std::uint64_t(a.goods)));
      std::set<int> gs;
      while (int(gs.size()) < want_goods)
        gs.insert(1 + int(rng.below(std::uint64_t(a.goods))));
      bid.goods.assign(gs.begin(), gs.end());
      a.bids.push_back(std::move(bid));
    }
    // best revenue over conflict-free bid subsets
    Weight best_revenue = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bids); ++mask) {
      std::set<int> taken;
      bool ok = true;
      Weight revenue = 0;
      for (int b = 0; b < bids && ok; ++b) {
        if (!((mask >> b) & 1)) continue;
        for (int good : a.bids[b].goods)
          if (!taken.insert(good).second) ok = false;
        revenue += a.bids[b].value;
      }
      if (ok) best_revenue = std::max(best_revenue, revenue);
    }
    Weight got = max_dpll(encode_auction(a)).optimum;
    if (Weight(total) - got != best_revenue) ++bad_auction;
  }

  std::ostringstream detail;
  detail << "vc " << 50 - bad_vc << "/50, clique " << 50 - bad_clique
         << "/50, maxcut " << 50 - bad_cut << "/50, maxone " << 50 - bad_one
         << "/50, auction " << 50 - bad_auction << "/50, "
         << seconds_since(t0) << " s";
  report(8, "encoder-correctness",
         bad_vc + bad_clique + bad_cut + bad_one + bad_auction == 0,
         detail.str());
}

// ---------------------------------------------------------------------------
// criterion 9: format fidelity

// Minimal LPB evaluation of the exported OPB text. Variables above
// `original_vars` are relaxation variables: each occurs in one constraint
// and positively in the objective, so a minimizing assignment sets it only
// when its constraint needs it.
struct OpbProblem {
  struct Term {
    long long coef;
    Var var;
    bool negated;
  };
  std::vector<Term> objective;
  std::vector<std::vector<Term>> constraints;
};

OpbProblem parse_opb(const std::string& text) {
  OpbProblem p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    bool is_obj = line.rfind("min:", 0) == 0;
    std::string body = is_obj ? line.substr(4) : line.substr(0, line.find(">="));
    std::istringstream ls(body);
    std::vector<OpbProblem::Term> terms;
    std::string tok;
    while (ls >> tok) {
      if (tok == ";") break;
      long long coef = std::stoll(tok);
      std::string lit;
      ls >> lit;
      bool neg = lit[0] == '~';
      Var v = Var(std::stoi(lit.substr(neg ? 2 : 1)));
      terms.push_back({coef, v, neg});
    }
    if (is_obj)
      p.objective = terms;
    else
      p.constraints.push_back(terms);
  }
  return p;
}

Weight opb_brute_optimum(const OpbProblem& p, Var original_vars, Weight top) {
  Weight best = top;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << original_vars);
       ++mask) {
    auto value = [&](Var v, bool neg) -> int {
      bool x = (mask >> (v - 1)) & 1;
      return (neg ? !x : x) ? 1 : 0;
    };
    bool feasible = true;
    std::vector<char> relax_needed;  // by constraint order
    unsigned __int128 obj = 0;
    std::set<Var> forced_relax;
    for (const auto& c : p.constraints) {
      long long sum = 0;
      Var relax = 0;
      for (const auto& t : c) {
        if (t.var > original_vars)
          relax = t.var;
        else
          sum += t.coef * value(t.var, t.negated);
      }
      if (sum >= 1) continue;
      if (relax == 0) {
        feasible = false;
        break;
      }
      forced_relax.insert(relax);
    }
    if (!feasible) continue;
    for (const auto& t : p.objective) {
      int v = t.var > original_vars ? (forced_relax.count(t.var) ? 1 : 0)
                                    : value(t.var, t.negated);
      obj += std::uint64_t(t.coef) * std::uint64_t(v);
    }
    best = std::min<Weight>(best, obj >= top ? top : Weight(obj));
  }
  return best;
}

void criterion9() {
  auto t0 = Clock::now();
  int bad_roundtrip = 0;
  Rng rng(9100);
  for (int i = 0; i < 100; ++i) {
    Var n = 4 + Var(rng.below(8));
    WeightedFormula f =
        gen_random_ksat(2 + int(rng.below(2)), n, int(2 * n) + int(rng.below(20)),
                        9200 + std::uint64_t(i));
    if (rng.coin()) f.add_empty_clause(1 + rng.below(3));
    std::string once = write_wcnf(f);
    std::string twice = write_wcnf(parse_wcnf(once));
    if (once != twice) ++bad_roundtrip;
  }

  int bad_opb = 0;
  for (int i = 0; i < 50; ++i) {
    Rng r2(9300 + std::uint64_t(i));
    Var n = 4 + Var(r2.below(7));
    WeightedFormula f = c2_random(r2, n, int(2 * n), 25, 3, 25);
    OpbProblem p = parse_opb(export_opb(f));
    Weight lpb = opb_brute_optimum(p, n, f.top());
    if (lpb != brute_force_opt(f).optimum) ++bad_opb;
  }

  std::ostringstream detail;
  detail << "wcnf write\xE2\x88\x98parse idempotent " << 100 - bad_roundtrip
         << "/100 byte-for-byte, opb optimum match " << 50 - bad_opb << "/50, "
         << seconds_since(t0) << " s";
  report(9, "format-fidelity", bad_roundtrip == 0 && bad_opb == 0,
         detail.str());
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria passed in %.1f s\n", 9 - g_failures,
              seconds_since(t0));
  return g_failures;
}
