// Shared helpers for the test binaries: seeded random physical inputs.
#pragma once

#include <cmath>
#include <random>

#include "bathprobe/bath.hpp"
#include "bathprobe/bloch.hpp"

namespace bathprobe::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  // Uniform in the closed Bloch ball.
  BlochVector bloch_vector() {
    for (;;) {
      const double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
      if (x * x + y * y + z * z <= 1.0) return {x, y, z};
    }
  }

  BathSpec bath() {
    return integer(0, 1) == 0 ? BathSpec::bosonic(uniform(0.05, 5.0))
                              : BathSpec::fermionic(uniform(0.0, 5.0));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bathprobe::testing
