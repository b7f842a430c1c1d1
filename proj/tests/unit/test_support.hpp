#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fracineq::testing {

inline double rel_err(double got, double want) {
  const double scale = std::abs(want);
  return scale > 0 ? std::abs(got - want) / scale : std::abs(got);
}

/// Portable uniform draws in [lo, hi) from raw mt19937_64 output.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fracineq::testing
