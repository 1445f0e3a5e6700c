#pragma once

#include <cstdint>
#include <random>

#include "complex_util.hpp"

namespace halfline {

// Deterministic random source. mt19937_64 has a fixed bit stream for a
// given seed on every platform; the mapping to doubles below is pinned
// here because the std distributions are implementation-defined.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  complexd uniform_disc(double radius) {
    for (;;) {
      double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {radius * x, radius * y};
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace halfline
