#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trs/gf_tower.hpp"
#include "trs/kernels.hpp"
#include "trs/matrix.hpp"
#include "trs/random.hpp"

namespace trs {

// Full secret description of a multi-twisted RS code C^{n,k}(alpha, t, h, eta):
// evaluation of sum_{i<k} f_i X^i + sum_j eta_j f_{h_j} X^{k-1+t_j} at alpha.
struct TwistedCodeParams {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::size_t> twists;  // t
  std::vector<std::size_t> hooks;   // h
  std::vector<Elem> eta;
  std::vector<Elem> alpha;

  std::size_t ell() const { return twists.size(); }
  bool operator==(const TwistedCodeParams& o) const;
};

enum class FamilyVariant { F, F_tilde };

// Plain [n, k] Reed-Solomon code (no twists).
TwistedCodeParams rs_params(FieldPtr field, std::vector<Elem> alpha, std::size_t k);

// Every violated structural condition, empty when the parameters are valid.
std::vector<std::string> validate_params(const TwistedCodeParams& p);

struct InequalityCheck {
  std::string name;
  bool satisfied;
  std::string detail;
};

// Deterministic part of the F / F~ family: r, t, h and every constraint on
// (n, k, ell, q0), evaluated in exact integer arithmetic.
struct FamilyShape {
  std::size_t n = 0, k = 0, ell = 0;
  unsigned base_degree = 0;  // q0 = 2^base_degree
  std::size_t r = 0;
  std::vector<std::size_t> twists;
  std::vector<std::size_t> hooks;
  unsigned field_degree = 0;  // q = 2^field_degree
  std::vector<InequalityCheck> checks;

  bool ok() const;
};

FamilyShape family_shape(std::size_t n, std::size_t k, std::size_t ell, unsigned base_degree,
                         FamilyVariant variant);

// Draws a member of F^{n,k}_ell (or F~). Throws ParameterRejected naming the
// first failed inequality.
TwistedCodeParams family_f_params(std::size_t n, std::size_t k, std::size_t ell,
                                  unsigned base_degree, FamilyVariant variant, Rng& rng);

// Same field, alpha and eta sampling as the family, but with t and h drawn
// uniformly among valid distinct choices and without the family's size
// inequalities. Still satisfies the subfield-chain MDS hypotheses; meant for
// small test profiles.
TwistedCodeParams tower_params(std::size_t n, std::size_t k, std::size_t ell,
                               unsigned base_degree, FamilyVariant variant, Rng& rng);

// True iff alpha lies in F_{s_0} with n <= s_0 and eta_i in F_{s_i} \ F_{s_{i-1}};
// a true result certifies the code is MDS.
bool mds_tower_certificate(const TwistedCodeParams& p);

CodeMatrix generator_matrix(const TwistedCodeParams& p);

struct SystematicForm {
  CodeMatrix matrix;     // [I | A]
  CodeMatrix transform;  // T with T * G = [I | A]
};

// Row reduction pivoting only on the first k columns. Throws ContractError if
// the leading k x k block is singular.
SystematicForm systematic_form_with_transform(const CodeMatrix& g);
CodeMatrix systematic_form(const CodeMatrix& g);

std::vector<Elem> encode(const TwistedCodeParams& p, std::span<const Elem> message);

struct DualCode {
  TwistedCodeParams params;
  std::vector<Elem> column_multipliers;  // alpha_i / n
};

// True iff alpha is exactly the group of n-th roots of unity.
bool is_multiplicative_group(const TwistedCodeParams& p);

// Explicit dual for multiplicative-group evaluation points; verifies G*H^T = 0
// before returning.
DualCode dual_params(const TwistedCodeParams& p);

// Generator of the dual code: generator_matrix(d.params) scaled by the
// column multipliers. Role tag: parity_check.
CodeMatrix dual_generator(const DualCode& d);

// Refuses (ContractError) when C(n, k) exceeds this many minors.
inline constexpr std::uint64_t kMaxBruteMinors = 50'000'000;

// Exhaustive k x k minor test.
bool mds_brute_check(const CodeMatrix& g, kernels::Exec exec = kernels::Exec::parallel);

}  // namespace trs
