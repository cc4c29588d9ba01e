#pragma once

#include <cstdint>
#include <random>

namespace bistellar {

// mt19937_64 is specified bit-for-bit by the standard; the distributions are
// not, so draws are derived from raw output here.
using Rng = std::mt19937_64;

// Uniform in [0, bound) by rejection; bound > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

// Uniform in [0, 1) with 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace bistellar
