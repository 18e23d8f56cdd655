#pragma once
// Small deterministic random helpers built directly on std::mt19937_64.
//
// The mt19937_64 output sequence is pinned by the standard, but
// std::shuffle and the std distributions are implementation-defined, so
// results produced through them can change across standard libraries.
// Everything that feeds frozen expected values (splits, folds, synthetic
// data, trial draws) goes through these helpers instead.

#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

namespace chaoscomp {

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

// Standard normal draw via Box-Muller; consumes exactly two uniforms.
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform_unit(rng);
  while (u1 <= 0.0) u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace chaoscomp
