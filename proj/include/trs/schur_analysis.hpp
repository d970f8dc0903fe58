#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trs/kernels.hpp"
#include "trs/matrix.hpp"
#include "trs/twisted_code.hpp"

namespace trs {

std::vector<Elem> schur_product(const FieldTower& field, std::span<const Elem> x,
                                std::span<const Elem> y);

// dim C^2 for the code generated by the rows of g (which must have full row
// rank): rank of all k(k+1)/2 pairwise row products.
std::size_t square_dimension(const CodeMatrix& g, kernels::Exec exec = kernels::Exec::parallel);

// Generator of the code shortened at `positions`: codewords vanishing there,
// with those coordinates removed. Throws if the shortened code is empty.
CodeMatrix shorten(const CodeMatrix& g, std::span<const std::size_t> positions);

std::size_t shortened_square_dimension(const CodeMatrix& g, std::span<const std::size_t> positions,
                                       kernels::Exec exec = kernels::Exec::parallel);

// |{d1 + d2 : d1, d2 in S} ∩ [0, n-1]| with S the monomial-like basis degrees.
std::size_t degree_bound_sumset(const TwistedCodeParams& p);

// Number of distinct degrees of (f*g) mod prod(X - alpha_i) over pairs of
// monomial-like basis polynomials. A certified lower bound on dim C^2, possibly
// weaker than the bound over all pairs f, g.
std::size_t degree_bound_remainder(const TwistedCodeParams& p);

struct GrsEnvelope {
  std::size_t inner_dim;  // min h_i (k when there are no twists)
  std::size_t outer_dim;  // k + max t_i (capped at n)
};

GrsEnvelope grs_envelope(const TwistedCodeParams& p);

struct SeparationBounds {
  long long delta = 0;
  // k + delta/2 as the exact fraction (2k + delta) / 2.
  long long outer_min_twice = 0;
  double outer_min = 0;
  // sqrt((k - 5/2)^2 - 2 delta) + 5/2; empty when the radicand is negative.
  std::optional<double> inner_max;
};

// Empty when delta = dim_sq - (2k - 1) <= 0 (square is GRS-consistent).
// Requires k < n/2.
std::optional<SeparationBounds> separation_bounds(std::size_t n, std::size_t k, std::size_t dim_sq);

enum class Verdict { grs_like, random_like, intermediate };

std::string_view to_string(Verdict v);

// GRS-like when dim = min(2k-1, n) (checked first), random-like when
// dim = min(k(k+1)/2, n), intermediate otherwise.
Verdict classify_square(std::size_t n, std::size_t k, std::size_t dim_sq);

struct ShorteningResult {
  std::vector<std::size_t> positions;
  std::size_t length;
  std::size_t dimension;
  std::size_t square_dim;
  Verdict verdict;
};

struct ReportOptions {
  // Shorten at each of the first `single_positions` coordinates (all when
  // larger than n).
  std::size_t single_positions = SIZE_MAX;
  std::size_t pair_samples = 10;
  std::uint64_t pair_seed = 1;
  kernels::Exec exec = kernels::Exec::parallel;
};

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t dim_square = 0;
  std::size_t dim_dual_square = 0;
  Verdict square_verdict = Verdict::intermediate;
  Verdict dual_square_verdict = Verdict::intermediate;
  std::vector<ShorteningResult> shortenings;
  std::optional<SeparationBounds> separation;
  // Only with secret parameters.
  std::optional<std::size_t> bound_sumset;
  std::optional<std::size_t> bound_remainder;
  std::optional<GrsEnvelope> envelope;
};

AnalysisReport distinguisher_report(const CodeMatrix& g, const TwistedCodeParams* params = nullptr,
                                    const ReportOptions& options = {});

// "key = value" lines; shortened dims as "shortened[i,j] = dim".
std::string serialize_report(const AnalysisReport& r);
// Aligned human-readable table.
std::string format_report_text(const AnalysisReport& r);

}  // namespace trs
