#pragma once

#include <cstdint>
#include <random>

namespace svdgp {

// All randomness in the library flows through this wrapper. The raw stream is
// std::mt19937_64 (its output sequence is fixed by the C++ standard), and the
// conversions below are pinned here instead of using <random> distributions,
// whose output is implementation-defined. Fixtures generated from a seed are
// therefore reproducible across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1): top 53 bits of the raw draw.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace svdgp
