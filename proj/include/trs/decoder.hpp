#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trs/kernels.hpp"
#include "trs/polynomial.hpp"
#include "trs/twisted_code.hpp"

namespace trs {

inline std::size_t unique_radius(std::size_t n, std::size_t k) { return (n - k) / 2; }

// Unique decoding of the [n, k] RS code on alpha up to tau <= (n-k)/2 errors:
// interpolate the received word, run the partial extended Euclid against
// prod (X - alpha_i) down to degree (n+k)/2, divide, and accept only on exact
// division, deg f < k and distance <= tau. Returns nullopt on failure.
std::optional<Poly> rs_decode(std::span<const Elem> received, std::span<const Elem> alpha,
                              std::size_t k, std::size_t tau, const FieldPtr& field);

// Precomputed state for repeated RS decoding on fixed evaluation points.
class RsDecoder {
 public:
  RsDecoder(FieldPtr field, std::vector<Elem> alpha, std::size_t k, std::size_t tau);

  std::optional<Poly> decode(std::span<const Elem> received) const;
  // Same as decode() when `interpolant` interpolates `received`.
  std::optional<Poly> decode_interpolated(const Poly& interpolant,
                                          std::span<const Elem> received) const;

  const Poly& vanishing() const { return vanishing_; }
  std::size_t k() const { return k_; }
  std::size_t tau() const { return tau_; }

 private:
  FieldPtr field_;
  std::vector<Elem> alpha_;
  std::size_t k_;
  std::size_t tau_;
  Poly vanishing_;
};

struct DecodeResult {
  std::vector<Elem> message;             // f_0 .. f_{k-1}
  std::vector<Elem> codeword;            // encode(params, message)
  std::vector<std::size_t> error_positions;
  std::vector<Elem> guesses;             // g_1 .. g_ell
};

struct DecodeStats {
  std::uint64_t rs_rounds = 0;
  // RS decoding succeeded but f_{h_i} != g_i for some i.
  std::uint64_t sift_discards = 0;
  // Passed the sift but the twisted codeword was farther than tau.
  std::uint64_t distance_rejects = 0;
  std::uint64_t accepted = 0;
};

enum class ScanMode { first_accept, exhaustive };

struct TwistedDecodeOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  ScanMode mode = ScanMode::first_accept;
  kernels::Exec exec = kernels::Exec::parallel;
};

struct TwistedDecodeOutcome {
  std::optional<DecodeResult> result;
  DecodeStats stats;
};

// Brute-force twisted decoder: for every guess (g_1..g_ell) in lexicographic
// element order, RS-decode r - ev(sum g_i eta_i X^{k-1+t_i}) and keep the
// candidate only if f_{h_i} = g_i and the twisted codeword is within tau.
// Throws BudgetExceeded when q^ell > budget and IntegrityError on a second
// acceptance.
TwistedDecodeOutcome twisted_decode(std::span<const Elem> received, const TwistedCodeParams& p,
                                    std::size_t tau, const TwistedDecodeOptions& options = {});

}  // namespace trs
