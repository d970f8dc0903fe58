#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace trs {

using Seed = std::array<std::uint8_t, 32>;

// Expands a 64-bit seed into the 32-byte seed record (little endian, zero
// padded).
Seed seed_from_u64(std::uint64_t value);

// The single source of randomness for key generation, sampling and
// encryption. Algorithm identifier: mt19937_64 keyed by std::seed_seq over
// the eight little-endian 32-bit words of the seed. Both are fully specified
// by the standard, so streams are reproducible across platforms. Bounded
// draws use rejection sampling (std distributions are implementation-defined).
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/seed_seq-v1";

  explicit Rng(const Seed& seed);
  explicit Rng(std::uint64_t seed) : Rng(seed_from_u64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  // Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace trs
