#include "trs/random.hpp"

#include <limits>
#include <vector>

#include "trs/error.hpp"

namespace trs {

Seed seed_from_u64(std::uint64_t value) {
  Seed seed{};
  for (int i = 0; i < 8; ++i) seed[i] = static_cast<std::uint8_t>(value >> (8 * i));
  return seed;
}

Rng::Rng(const Seed& seed) {
  std::vector<std::uint32_t> words(8);
  for (std::size_t w = 0; w < 8; ++w) {
    std::uint32_t v = 0;
    for (std::size_t b = 0; b < 4; ++b) v |= std::uint32_t{seed[4 * w + b]} << (8 * b);
    words[w] = v;
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractError("Rng::below: empty range");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw ContractError("Rng::between: empty range");
  if (lo == 0 && hi == std::numeric_limits<std::uint64_t>::max()) return engine_();
  return lo + below(hi - lo + 1);
}

}  // namespace trs
