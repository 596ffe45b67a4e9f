#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <doctest.h>

namespace test {

inline double rel(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::fabs(want);
}

inline const double kPi = std::acos(-1.0);
inline const double kSqrtPi = std::sqrt(kPi);

// Hand-rolled generator for property tests; seeded per test so failures
// reproduce.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Stays 0.05 away from the integers.
  double non_integer(double lo, double hi) {
    for (;;) {
      const double v = real(lo, hi);
      if (std::fabs(v - std::round(v)) >= 0.05) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace test
