// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cassert>
#include <cstdint>

namespace maxres {

// Clause weights are naturals in [0..top]. The instance bound `top` is a
// concrete value, not a sentinel: a weight equal to top marks a mandatory
// (hard) clause, and all weight arithmetic saturates there.
using Weight = std::uint64_t;

// Capped addition: min(a+b, top). top is absorbing.
inline Weight oplus(Weight a, Weight b, Weight top) {
  assert(a <= top && b <= top);
  return (b != 0 && a >= top - b) ? top : a + b;
}

// Capped subtraction. Requires u >= w; top is absorbing.
inline Weight ominus(Weight u, Weight w, Weight top) {
  assert(u <= top && w <= u);
  return u == top ? top : u - w;
}

}  // namespace maxres
