// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <cstdint>
#include <random>

namespace maxres {

// mt19937_64 raw output is pinned by the standard; only the distribution
// adapters are implementation-defined, so sampling is done by hand to keep
// generated instances identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return gen_() & 1; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace maxres
