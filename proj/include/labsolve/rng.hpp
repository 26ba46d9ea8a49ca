#pragma once

#include <cstdint>
#include <random>

namespace labsolve {

// Every stochastic choice in the solver flows through one of these, so a run
// is reproducible from its seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits64() { return engine_(); }

  // Uniform integer on [lo, hi], both ends inclusive.
  long long uniform_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }

  // Uniform real on [0, 1).
  double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace labsolve
