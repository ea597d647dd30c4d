// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cassert>
#include <cstdint>
#include <functional>

namespace maxres {

// Variable indices start at 1.
using Var = std::int32_t;

// A literal is a signed variable reference, stored DIMACS-style (+v / -v).
class Lit {
 public:
  constexpr Lit() = default;
  constexpr explicit Lit(std::int32_t dimacs) : code_(dimacs) {
    assert(dimacs != 0);
  }
  static constexpr Lit pos(Var v) { return Lit(v); }
  static constexpr Lit neg(Var v) { return Lit(-v); }

  constexpr Var var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr Lit operator~() const { return Lit(-code_); }
  constexpr std::int32_t dimacs() const { return code_; }

  // Canonical ordering key: ascending variable, negative phase first.
  constexpr std::uint64_t key() const {
    return (static_cast<std::uint64_t>(var()) << 1) | (positive() ? 1u : 0u);
  }

  friend constexpr bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend constexpr bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend constexpr bool operator<(Lit a, Lit b) { return a.key() < b.key(); }

 private:
  std::int32_t code_ = 0;
};

}  // namespace maxres

template <>
struct std::hash<maxres::Lit> {
  std::size_t operator()(maxres::Lit l) const noexcept {
    return std::hash<std::int32_t>()(l.dimacs());
  }
};
