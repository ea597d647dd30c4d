// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <charconv>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "formula.hpp"
#include "random.hpp"

namespace maxres {

// ---------------------------------------------------------------------------
// Problem structures

struct Graph {
  Var n = 0;
  std::vector<std::pair<Var, Var>> edges;  // u < v, sorted, distinct

  void add_edge(Var u, Var v) {
    assert(u != v && u >= 1 && v >= 1 && u <= n && v <= n);
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  }
  void normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  Graph complement() const {
    Graph g;
    g.n = n;
    std::set<std::pair<Var, Var>> have(edges.begin(), edges.end());
    for (Var u = 1; u <= n; ++u)
      for (Var v = u + 1; v <= n; ++v)
        if (!have.count({u, v})) g.edges.push_back({u, v});
    return g;
  }
};

struct CnfFormula {
  Var n = 0;
  std::vector<LitVec> clauses;
};

struct AuctionInstance {
  struct Bid {
    Weight value = 0;
    std::vector<int> goods;  // 1-based indices
  };
  int goods = 0;
  std::vector<Bid> bids;
};

// ---------------------------------------------------------------------------
// Parsing helpers

namespace detail {

struct LineLexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  // next non-empty, non-comment line; false at EOF
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view l = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line;
      std::size_t b = l.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) continue;
      std::size_t e = l.find_last_not_of(" \t\r");
      l = l.substr(b, e - b + 1);
      if (l.front() == 'c' && (l.size() == 1 || l[1] == ' ' || l[1] == '\t'))
        continue;
      out = l;
      return true;
    }
    return false;
  }
};

inline std::vector<std::string_view> split_ws(std::string_view l) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < l.size()) {
    while (i < l.size() && (l[i] == ' ' || l[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < l.size() && l[j] != ' ' && l[j] != '\t') ++j;
    if (j > i) out.push_back(l.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, int line, const char* what) {
  Int value{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw parse_error(line, std::string("bad ") + what + " '" +
                                std::string(tok) + "'");
  return value;
}

inline Weight saturating_weight_sum(unsigned __int128 sum) {
  constexpr auto kMax = std::numeric_limits<Weight>::max();
  return sum >= kMax ? kMax : static_cast<Weight>(sum);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// WCNF

// Header "p wcnf <nvars> <nclauses> <top>"; the legacy two-field header is
// accepted, in which case top defaults to 1 plus the sum of all weights.
// Clause lines are "<weight> <lit>... 0"; duplicate clauses aggregate and
// weights at or above top clamp to top.
inline WeightedFormula parse_wcnf(std::string_view text) {
  detail::LineLexer lex{text};
  std::string_view line;
  Var nvars = -1;
  bool have_top = false;
  Weight top = 0;
  struct Raw {
    LitVec lits;
    Weight w;
  };
  std::vector<Raw> raw;
  unsigned __int128 weight_sum = 0;

  while (lex.next(line)) {
    auto tok = detail::split_ws(line);
    if (tok[0] == "p") {
      if (nvars >= 0) throw parse_error(lex.line, "duplicate problem line");
      if (tok.size() < 4 || tok.size() > 5 || tok[1] != "wcnf")
        throw parse_error(lex.line, "malformed header, expected 'p wcnf n m [top]'");
      nvars = detail::parse_int<Var>(tok[2], lex.line, "variable count");
      if (nvars < 0) throw parse_error(lex.line, "negative variable count");
      detail::parse_int<long long>(tok[3], lex.line, "clause count");
      if (tok.size() == 5) {
        top = detail::parse_int<Weight>(tok[4], lex.line, "top");
        if (top == 0) throw parse_error(lex.line, "top must be positive");
        have_top = true;
      }
      continue;
    }
    if (nvars < 0) throw parse_error(lex.line, "clause before problem line");
    Weight w = 0;
    {
      auto sw = detail::parse_int<long long>(tok[0], lex.line, "weight");
      if (sw <= 0) throw parse_error(lex.line, "clause weight must be positive");
      w = static_cast<Weight>(sw);
    }
    if (tok.back() != "0") throw parse_error(lex.line, "clause not 0-terminated");
    Raw r;
    r.w = w;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
      auto d = detail::parse_int<std::int32_t>(tok[i], lex.line, "literal");
      if (d == 0) throw parse_error(lex.line, "unexpected 0 inside clause");
      if (d > nvars || -d > nvars)
        throw parse_error(lex.line, "literal out of range");
      r.lits.push_back(Lit(d));
    }
    weight_sum += w;
    raw.push_back(std::move(r));
  }
  if (nvars < 0) throw parse_error(lex.line, "missing problem line");
  if (!have_top)
    top = detail::saturating_weight_sum(weight_sum + 1);

  WeightedFormula f(nvars, top);
  for (auto& r : raw) f.add_clause(std::move(r.lits), r.w);
  return f;
}

inline std::string write_wcnf(const WeightedFormula& f) {
  auto clauses = f.canonical_clauses();
  std::size_t count = clauses.size() + (f.lower_bound() > 0 ? 1 : 0);
  std::string out;
  out += "p wcnf " + std::to_string(f.num_vars()) + " " + std::to_string(count) +
         " " + std::to_string(f.top()) + "\n";
  if (f.lower_bound() > 0)
    out += std::to_string(f.lower_bound()) + " 0\n";
  for (const auto& c : clauses) {
    out += std::to_string(c.weight);
    for (Lit l : c.lits) out += " " + std::to_string(l.dimacs());
    out += " 0\n";
  }
  return out;
}

// Plain CNF ("p cnf n m"), token-based as in the DIMACS tradition.
inline CnfFormula parse_dimacs_cnf(std::string_view text) {
  detail::LineLexer lex{text};
  std::string_view line;
  CnfFormula cnf;
  bool have_header = false;
  LitVec cur;
  while (lex.next(line)) {
    auto tok = detail::split_ws(line);
    if (tok[0] == "p") {
      if (have_header) throw parse_error(lex.line, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf")
        throw parse_error(lex.line, "malformed header, expected 'p cnf n m'");
      cnf.n = detail::parse_int<Var>(tok[2], lex.line, "variable count");
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lex.line, "clause before problem line");
    for (auto t : tok) {
      auto d = detail::parse_int<std::int32_t>(t, lex.line, "literal");
      if (d == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        if (d > cnf.n || -d > cnf.n)
          throw parse_error(lex.line, "literal out of range");
        cur.push_back(Lit(d));
      }
    }
  }
  if (!have_header) throw parse_error(lex.line, "missing problem line");
  if (!cur.empty()) cnf.clauses.push_back(cur);
  return cnf;
}

// DIMACS graph: "p edge n m" then "e u v" lines.
inline Graph parse_dimacs_graph(std::string_view text) {
  detail::LineLexer lex{text};
  std::string_view line;
  Graph g;
  bool have_header = false;
  while (lex.next(line)) {
    auto tok = detail::split_ws(line);
    if (tok[0] == "p") {
      if (have_header) throw parse_error(lex.line, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw parse_error(lex.line, "malformed header, expected 'p edge n m'");
      g.n = detail::parse_int<Var>(tok[2], lex.line, "vertex count");
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw parse_error(lex.line, "edge before problem line");
      if (tok.size() != 3) throw parse_error(lex.line, "malformed edge line");
      Var u = detail::parse_int<Var>(tok[1], lex.line, "vertex");
      Var v = detail::parse_int<Var>(tok[2], lex.line, "vertex");
      if (u < 1 || v < 1 || u > g.n || v > g.n)
        throw parse_error(lex.line, "vertex out of range");
      if (u == v) throw parse_error(lex.line, "self loop");
      g.add_edge(u, v);
      continue;
    }
    throw parse_error(lex.line, "unrecognized line");
  }
  if (!have_header) throw parse_error(lex.line, "missing problem line");
  g.normalize();
  return g;
}

inline std::string write_dimacs_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n) + " " +
                    std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges)
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// Auction text: "goods bids" header, then one bid per line "value g1 g2 ...".
// Values are naturals; fractional prices must be pre-scaled by the caller.
inline AuctionInstance parse_auction(std::string_view text) {
  detail::LineLexer lex{text};
  std::string_view line;
  AuctionInstance a;
  bool have_header = false;
  while (lex.next(line)) {
    auto tok = detail::split_ws(line);
    if (!have_header) {
      if (tok.size() != 2)
        throw parse_error(lex.line, "malformed header, expected 'goods bids'");
      a.goods = detail::parse_int<int>(tok[0], lex.line, "good count");
      detail::parse_int<int>(tok[1], lex.line, "bid count");
      have_header = true;
      continue;
    }
    AuctionInstance::Bid bid;
    bid.value = detail::parse_int<Weight>(tok[0], lex.line, "bid value");
    if (bid.value < 1) throw parse_error(lex.line, "bid value must be positive");
    for (std::size_t i = 1; i < tok.size(); ++i) {
      int good = detail::parse_int<int>(tok[i], lex.line, "good");
      if (good < 1 || good > a.goods)
        throw parse_error(lex.line, "good out of range");
      bid.goods.push_back(good);
    }
    a.bids.push_back(std::move(bid));
  }
  if (!have_header) throw parse_error(lex.line, "missing header");
  return a;
}

// ---------------------------------------------------------------------------
// Encoders

// Minimum vertex cover: (x̄_i,1) per vertex, (x_i∨x_j,⊤) per edge. The
// optimum is the size of a minimum cover. Default ⊤ = n+1.
inline WeightedFormula encode_vertex_cover(const Graph& g,
                                           std::optional<Weight> top = {}) {
  Weight t = top.value_or(Weight(g.n) + 1);
  WeightedFormula f(g.n, t);
  for (Var v = 1; v <= g.n; ++v) f.add_clause(LitVec{Lit::neg(v)}, 1);
  for (auto [u, v] : g.edges)
    f.add_clause(LitVec{Lit::pos(u), Lit::pos(v)}, t);
  return f;
}

// Maximum clique of G = minimum vertex cover of its complement;
// clique size = n - optimum.
inline WeightedFormula encode_max_clique(const Graph& g,
                                         std::optional<Weight> top = {}) {
  return encode_vertex_cover(g.complement(), top);
}

// Max-cut: clauses (x_i∨x_j,1) and (x̄_i∨x̄_j,1) per edge;
// cut size = |E| - optimum.
inline WeightedFormula encode_max_cut(const Graph& g,
                                      std::optional<Weight> top = {}) {
  Weight t = top.value_or(2 * Weight(g.edges.size()) + 1);
  WeightedFormula f(g.n, t);
  for (auto [u, v] : g.edges) {
    f.add_clause(LitVec{Lit::pos(u), Lit::pos(v)}, 1);
    f.add_clause(LitVec{Lit::neg(u), Lit::neg(v)}, 1);
  }
  return f;
}

// Max-one: the input clauses become mandatory, plus (x_i,1) per variable.
// For a satisfiable input the optimum is n minus the maximum number of true
// variables over its models; otherwise it is ⊤.
inline WeightedFormula encode_max_one(const CnfFormula& cnf,
                                      std::optional<Weight> top = {}) {
  Weight t = top.value_or(Weight(cnf.n) + 1);
  WeightedFormula f(cnf.n, t);
  for (const auto& c : cnf.clauses) f.add_clause(c, t);
  for (Var v = 1; v <= cnf.n; ++v) f.add_clause(LitVec{Lit::pos(v)}, 1);
  return f;
}

// Winner determination: (x_i,u_i) per bid (rejecting bid i forfeits u_i), a
// mandatory (x̄_i∨x̄_j,⊤) per pair of bids sharing a good.
// Revenue = Σ u_i - optimum. Default ⊤ = 1 + Σ u_i.
inline WeightedFormula encode_auction(const AuctionInstance& a,
                                      std::optional<Weight> top = {}) {
  unsigned __int128 sum = 0;
  for (const auto& b : a.bids) sum += b.value;
  Weight t = top.value_or(detail::saturating_weight_sum(sum + 1));
  Var n = Var(a.bids.size());
  WeightedFormula f(n, t);
  for (Var i = 1; i <= n; ++i)
    f.add_clause(LitVec{Lit::pos(i)}, a.bids[i - 1].value);
  for (Var i = 1; i <= n; ++i)
    for (Var j = i + 1; j <= n; ++j) {
      const auto& gi = a.bids[i - 1].goods;
      const auto& gj = a.bids[j - 1].goods;
      bool conflict = false;
      for (int g : gi)
        if (std::find(gj.begin(), gj.end(), g) != gj.end()) {
          conflict = true;
          break;
        }
      if (conflict) f.add_clause(LitVec{Lit::neg(i), Lit::neg(j)}, t);
    }
  return f;
}

// ---------------------------------------------------------------------------
// Linear pseudo-Boolean export

// One constraint C' >= 1 per hard clause; per non-unary soft clause a
// relaxed constraint C' + r_j >= 1 with a fresh variable r_j; the objective
// charges u_j r_j per relaxed clause plus, for each unary soft clause, its
// weight on the falsifying phase of the variable. The stored lower bound is
// a constant offset and is not exported.
inline std::string export_opb(const WeightedFormula& f) {
  auto clauses = f.canonical_clauses();
  auto term = [](Weight w, Lit l) {
    std::string t = "+" + std::to_string(w) + " ";
    if (!l.positive()) t += "~";
    t += "x" + std::to_string(l.var());
    return t;
  };

  std::vector<std::string> hard, soft;
  std::string objective = "min:";
  Var next_fresh = f.num_vars() + 1;
  std::string unary_terms;
  for (const auto& c : clauses) {
    std::string body;
    for (Lit l : c.lits) body += (body.empty() ? "" : " ") + term(1, l);
    if (c.weight == f.top()) {
      hard.push_back(body + " >= 1 ;");
    } else if (c.lits.size() == 1) {
      // falsified exactly when the literal is false
      unary_terms += " " + term(c.weight, ~c.lits.front());
    } else {
      Var r = next_fresh++;
      soft.push_back(body + " " + term(1, Lit::pos(r)) + " >= 1 ;");
      objective += " " + term(c.weight, Lit::pos(r));
    }
  }
  objective += unary_terms;
  std::string out = objective + " ;\n";
  for (auto& h : hard) out += h + "\n";
  for (auto& s : soft) out += s + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Random generators

// m clauses of k distinct uniformly drawn variables with fair-coin signs,
// weight 1 each; repeated clauses aggregate, so the total weight is m.
inline WeightedFormula gen_random_ksat(int k, Var n, int m,
                                       std::uint64_t seed) {
  if (k < 1 || n < k) throw std::invalid_argument("gen_random_ksat: k > n");
  Rng rng(seed);
  WeightedFormula f(n, Weight(m) + 1);
  std::vector<char> used(n + 1, 0);
  for (int i = 0; i < m; ++i) {
    LitVec lits;
    while (int(lits.size()) < k) {
      Var v = Var(rng.below(std::uint64_t(n))) + 1;
      if (used[v]) continue;
      used[v] = 1;
      lits.push_back(rng.coin() ? Lit::pos(v) : Lit::neg(v));
    }
    for (Lit l : lits) used[l.var()] = 0;
    f.add_clause(std::move(lits), 1);
  }
  return f;
}

// e distinct uniform edges over n vertices.
inline Graph gen_random_graph(Var n, std::size_t e, std::uint64_t seed) {
  std::size_t all = std::size_t(n) * (n - 1) / 2;
  if (e > all) throw std::invalid_argument("gen_random_graph: too many edges");
  Rng rng(seed);
  Graph g;
  g.n = n;
  std::set<std::pair<Var, Var>> chosen;
  while (chosen.size() < e) {
    Var u = Var(rng.below(std::uint64_t(n))) + 1;
    Var v = Var(rng.below(std::uint64_t(n))) + 1;
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert({u, v});
  }
  g.edges.assign(chosen.begin(), chosen.end());
  return g;
}

}  // namespace maxres
