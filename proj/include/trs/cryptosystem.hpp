#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trs/decoder.hpp"
#include "trs/matrix.hpp"
#include "trs/random.hpp"
#include "trs/twisted_code.hpp"

namespace trs {

// Textbook McEliece over twisted RS codes with a systematic public key.
// Research code: no CCA conversion, no constant-time guarantees.

struct PublicKey {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t tau = 0;
  CodeMatrix a;  // k x (n-k), the non-identity part of [I | A]
};

struct SecretKey {
  TwistedCodeParams params;
  CodeMatrix transform;  // T with T * G = [I | A]
  std::size_t tau = 0;
  Seed seed{};
};

struct KeyPair {
  PublicKey pub;
  SecretKey sec;
};

// relaxed = false draws from the F / F~ family and rejects parameters that
// violate its inequalities; relaxed = true uses tower_params (same MDS
// certificate, arbitrary distinct twists and hooks) for small profiles.
KeyPair keygen(std::size_t n, std::size_t k, std::size_t ell, unsigned base_degree,
               FamilyVariant variant, const Seed& seed, bool relaxed = false);

// Rebuilds the public key from the secret parameters.
PublicKey derive_public(const SecretKey& sk);

// [I | A]
CodeMatrix public_generator(const PublicKey& pk);

// Uniform error of exactly `weight` nonzero entries: support from a partial
// Fisher-Yates shuffle, values uniform nonzero.
std::vector<Elem> random_error(const FieldTower& field, std::size_t n, std::size_t weight, Rng& rng);

// m * [I | A] + e with wt(e) = tau.
std::vector<Elem> encrypt(const PublicKey& pk, std::span<const Elem> message, const Seed& seed);
// Same with an explicit error weight; for exercising failure paths.
std::vector<Elem> encrypt_with_weight(const PublicKey& pk, std::span<const Elem> message,
                                      const Seed& seed, std::size_t weight);

struct DecryptOutcome {
  std::optional<std::vector<Elem>> message;
  DecodeStats stats;
};

// Twisted decoding under the secret parameters; the message is the systematic
// part of the decoded codeword, cross-checked against the decoded polynomial
// through T. Empty message on decoding failure.
DecryptOutcome decrypt(const SecretKey& sk, std::span<const Elem> ciphertext,
                       const TwistedDecodeOptions& options = {});

struct SecurityEstimate {
  double work_factor_log2 = 0;
  double key_size_kb = 0;
  std::size_t tau_unique = 0;
  std::size_t tau_list = 0;
  // log2(n! (q - sqrt q)): the raw count of family members, an over-estimate
  // of the number of inequivalent codes.
  double keyspace_log2 = 0;
};

// W_I = C(n,k)/C(n-tau,k) * k^3 * log2(q)^2 with exact binomials;
// K_sys = k(n-k) log2(q) / 8192 KB; tau_list = floor(n - sqrt(n(k-1))).
SecurityEstimate security_estimate(std::size_t n, std::size_t k, double log2_q, std::size_t tau);

// Exact K_sys numerator k(n-k)log2(q) for integral log2(q); divide by 8192.
std::uint64_t key_size_bits(std::size_t n, std::size_t k, unsigned log2_q);

// ---- serialization ----------------------------------------------------------

inline constexpr std::uint8_t kKeyFormatVersion = 1;
enum class KeyRole : std::uint8_t { public_key = 0, secret_key = 1 };

std::vector<std::uint8_t> serialize_public(const PublicKey& pk);
std::vector<std::uint8_t> serialize_secret(const SecretKey& sk);
PublicKey deserialize_public(std::span<const std::uint8_t> bytes);
SecretKey deserialize_secret(std::span<const std::uint8_t> bytes);
// Role byte of a key file without parsing the rest.
KeyRole peek_key_role(std::span<const std::uint8_t> bytes);

// Size of the fixed header shared by both key roles.
inline constexpr std::size_t kKeyHeaderBytes = 4 + 1 + 1 + 1 + 8 + 1 + 2 + 2 + 2;

std::vector<std::uint8_t> serialize_ciphertext(const FieldTower& field, std::span<const Elem> c);
std::vector<Elem> deserialize_ciphertext(const FieldTower& field, std::span<const std::uint8_t> bytes);

// Byte-string codec: u16 LE length prefix followed by the bytes, read as a
// little-endian bit stream and cut into m0-bit chunks, zero padded to k
// elements. Throws FormatError when the message does not fit.
std::vector<Elem> pack_message(std::span<const std::uint8_t> bytes, unsigned base_degree, std::size_t k);
std::vector<std::uint8_t> unpack_message(std::span<const Elem> message, unsigned base_degree);
// Largest byte string pack_message accepts.
std::size_t message_capacity(unsigned base_degree, std::size_t k);

}  // namespace trs
