// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "literal.hpp"

namespace maxres {

// Total or partial truth assignment over variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var num_vars) : value_(num_vars + 1, kUnassigned) {}

  Var num_vars() const { return static_cast<Var>(value_.size()) - 1; }

  bool assigned(Var v) const { return at(v) != kUnassigned; }
  bool value(Var v) const {
    assert(assigned(v));
    return at(v) == 1;
  }
  void set(Var v, bool val) { grow(v), value_[v] = val ? 1 : 0; }
  void set(Lit l) { set(l.var(), l.positive()); }
  void unset(Var v) { grow(v), value_[v] = kUnassigned; }

  bool satisfies(Lit l) const {
    return assigned(l.var()) && value(l.var()) == l.positive();
  }
  bool falsifies(Lit l) const {
    return assigned(l.var()) && value(l.var()) != l.positive();
  }

  template <class VarRange>
  bool complete_over(const VarRange& vars) const {
    for (Var v : vars)
      if (!assigned(v)) return false;
    return true;
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;
  std::int8_t at(Var v) const {
    return v < static_cast<Var>(value_.size()) ? value_[v] : kUnassigned;
  }
  void grow(Var v) {
    if (v >= static_cast<Var>(value_.size())) value_.resize(v + 1, kUnassigned);
  }
  std::vector<std::int8_t> value_;
};

}  // namespace maxres
