#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace agorank::rng {

/// Every stochastic operation in the library draws from this engine type,
/// seeded explicitly. std::mt19937_64 has a fully specified output sequence,
/// so identical seeds give identical results on every platform. The helpers
/// below avoid std::uniform_int_distribution and friends, whose output is
/// implementation-defined.
using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

/// splitmix64 mix step; used to derive independent per-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derive the seed for a numbered sub-stream (repeat, trial, worker item).
/// The derivation is a pure function of (master, stream), so results do not
/// depend on scheduling or evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

/// Unbiased integer in [0, n) by rejection sampling.
inline std::uint64_t uniform_below(Engine& gen, std::uint64_t n) {
  // Accept draws in [2^64 mod n, 2^64); that range has size divisible by n.
  const std::uint64_t min = (0 - n) % n;
  std::uint64_t x = gen();
  while (x < min) x = gen();
  return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// In-place Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, Engine& gen) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(gen, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace agorank::rng
