#pragma once

#include <cstdint>
#include <random>

namespace leoaoi {

/// All stochastic operations take the generator explicitly so that every run
/// is reproducible from its seed.
using Rng = std::mt19937_64;

/// Derives an independent stream seed from (master seed, worker index) via a
/// splitmix64 round. Parallel workers each own a generator seeded this way.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

}  // namespace leoaoi
