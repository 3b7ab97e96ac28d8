#pragma once

#include <cstdint>
#include <random>

namespace dualdist {

// splitmix64 finalizer. Seed derivation goes through this so that trial-level
// randomness can be reproduced from (master_seed, index) alone.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Two-argument seed hash: hash64(master, i) yields the seed of trial i.
inline std::uint64_t hash64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

using Rng = std::mt19937_64;

// std::*_distribution output is implementation-defined, so all draws use the
// explicit conversions below; one seed means one stream on every platform.

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) via 128-bit multiply-shift.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace dualdist
