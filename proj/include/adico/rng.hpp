#pragma once

#include <cstdint>
#include <random>

namespace adico {

/// Seedable random source used by every randomized operation.
///
/// The algorithm identifier ("mt19937_64") is reported in run manifests so
/// experiments can be replayed. Bounded draws use rejection sampling on raw
/// 64-bit outputs instead of std::uniform_int_distribution, whose mapping is
/// implementation-defined; this keeps streams byte-identical across
/// standard libraries.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  bool bit() { return next() & 1u; }

  /// Uniform draw from [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
};

/// Per-trial seed derivation (splitmix64 of seed + golden-ratio stride), so
/// trial statistics do not depend on how trials are split across workers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace adico
