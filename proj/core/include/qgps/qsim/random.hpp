#pragma once

#include <cstdint>
#include <random>

namespace qgps::qsim {

using Rng = std::mt19937_64;

/// Derive a decorrelated child seed (splitmix64 over seed and stream index).
/// Used to give rounds/trials independent reproducible streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace qgps::qsim
