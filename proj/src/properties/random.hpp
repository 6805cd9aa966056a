#pragma once

// Portable draws on top of mt19937_64: the standard distributions are
// implementation-defined, which would make seeds non-reproducible across
// standard libraries.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace electre_score::properties::detail {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Integer in [lo, hi].
inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline bool coin(std::mt19937_64& rng, double p = 0.5) { return uniform01(rng) < p; }

/// Uniform on the half-unit grid inside [lo, hi]; the grid creates exact ties.
inline double half_step(std::mt19937_64& rng, double lo, double hi) {
  const auto steps = static_cast<std::size_t>(std::floor((hi - lo) * 2.0));
  return lo + 0.5 * static_cast<double>(uniform_int(rng, 0, steps));
}

}  // namespace electre_score::properties::detail
