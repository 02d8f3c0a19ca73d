#pragma once

#include <cstdint>
#include <random>

namespace radialnet {

// Engine used for every stochastic routine. Seeding goes through
// std::seed_seq so that (seed, stream) pairs give decorrelated states.
using Rng = std::mt19937_64;

inline Rng MakeRng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

// Seed for realization `stream` of an ensemble keyed by `seed`.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  Rng rng = MakeRng(seed, stream + 1);
  return rng();
}

// Uniform integer in [0, bound) by Lemire's multiply-shift with rejection.
// Hand-rolled because std::uniform_int_distribution differs between
// standard libraries.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace radialnet
