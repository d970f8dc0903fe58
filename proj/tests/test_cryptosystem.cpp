#include <doctest.h>

#include <cmath>
#include <set>

#include "trs/cryptosystem.hpp"
#include "trs/error.hpp"

using namespace trs;

namespace {

std::vector<Elem> random_message(const FieldTower& f, std::size_t k, Rng& rng) {
  std::vector<Elem> m(k);
  for (auto& x : m) x = f.random_element(rng);
  return m;
}

KeyPair toy(std::uint64_t seed) {
  return keygen(15, 5, 1, 4, FamilyVariant::F, seed_from_u64(seed), /*relaxed=*/true);
}

// log2 of C(n,k)/C(n-t,k) k^3 log2(q)^2 through lgamma; an independent
// floating-point route to the same number.
double wi_lgamma(double n, double k, double lq, double t) {
  auto lc = [](double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
  return (lc(n, k) - lc(n - t, k)) / std::log(2.0) + 3 * std::log2(k) + 2 * std::log2(lq);
}

}  // namespace

TEST_CASE("security estimate reproduces the example parameters") {
  const auto u = security_estimate(255, 117, 16, 69);
  CHECK(u.work_factor_log2 >= 105.0);
  CHECK(u.work_factor_log2 == doctest::Approx(wi_lgamma(255, 117, 16, 69)).epsilon(1e-9));
  CHECK(u.key_size_kb == doctest::Approx(258336.0 / 8192.0));
  CHECK(std::round(u.key_size_kb * 10) / 10 == doctest::Approx(31.5));
  CHECK(u.tau_unique == 69);
  CHECK(u.tau_list == 83);
  CHECK(key_size_bits(255, 117, 16) == 258336);

  const auto l = security_estimate(255, 117, 16, 83);
  CHECK(l.work_factor_log2 >= 126.0);
  CHECK(l.work_factor_log2 == doctest::Approx(wi_lgamma(255, 117, 16, 83)).epsilon(1e-9));

  CHECK(std::round(security_estimate(2048, 1608, 1, 40).key_size_kb * 10) / 10 == doctest::Approx(86.4));
  CHECK(std::round(security_estimate(3262, 2482, 1, 66).key_size_kb * 10) / 10 == doctest::Approx(236.3));

  // log2(255!) + log2(2^16 - 2^8)
  CHECK(u.keyspace_log2 == doctest::Approx(std::lgamma(256.0) / std::log(2.0) + std::log2(65536.0 - 256.0)));
}

TEST_CASE("work factor grows with tau; Johnson radius by exact integers") {
  double prev = 0;
  for (std::size_t t = 1; t < 138; ++t) {
    const auto e = security_estimate(255, 117, 16, t);
    CHECK(e.work_factor_log2 > prev);
    prev = e.work_factor_log2;
    CHECK(e.tau_list >= e.tau_unique);
  }
  // n(k-1) a perfect square: 16 * 4 = 64, n - 8 = 8 exactly
  CHECK(security_estimate(16, 5, 4, 2).tau_list == 8);
  CHECK_THROWS_AS(security_estimate(255, 117, 16, 138), ContractError);
}

TEST_CASE("keygen is deterministic and consistent") {
  const auto a = keygen(255, 117, 1, 8, FamilyVariant::F, seed_from_u64(5));
  const auto b = keygen(255, 117, 1, 8, FamilyVariant::F, seed_from_u64(5));
  CHECK(serialize_public(a.pub) == serialize_public(b.pub));
  CHECK(serialize_secret(a.sec) == serialize_secret(b.sec));
  CHECK(a.pub.tau == 69);
  CHECK(same_row_space(public_generator(a.pub), generator_matrix(a.sec.params)));
  CHECK(serialize_public(a.pub).size() == kKeyHeaderBytes + 117 * 138 * 2);
  CHECK(serialize_public(derive_public(a.sec)) == serialize_public(a.pub));
  const auto c = keygen(255, 117, 1, 8, FamilyVariant::F, seed_from_u64(6));
  CHECK(serialize_public(a.pub) != serialize_public(c.pub));
  CHECK_THROWS_AS(keygen(15, 5, 1, 4, FamilyVariant::F, seed_from_u64(1)), ParameterRejected);
}

TEST_CASE("encryption adds exactly tau errors") {
  const auto kp = toy(1);
  Rng rng(2);
  const auto m = random_message(*kp.pub.field, 5, rng);
  const auto codeword = vec_mat(m, public_generator(kp.pub));
  std::set<std::vector<Elem>> errors;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto c = encrypt(kp.pub, m, seed_from_u64(s));
    CHECK(hamming_distance(c, codeword) == kp.pub.tau);
    errors.insert(c);
  }
  CHECK(errors.size() == 100);
  PublicKey zero{kp.pub.field, kp.pub.n, kp.pub.k, 0, kp.pub.a};
  CHECK(encrypt(zero, m, seed_from_u64(1)) == codeword);
  CHECK_THROWS_AS(encrypt(kp.pub, std::vector<Elem>(4, 0), seed_from_u64(1)), ContractError);
}

TEST_CASE("toy round trips") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto kp = toy(s);
    Rng rng(s + 1000);
    const auto m = random_message(*kp.pub.field, 5, rng);
    const auto c = encrypt(kp.pub, m, seed_from_u64(s + 2000));
    const auto out = decrypt(kp.sec, c);
    REQUIRE(out.message);
    CHECK(*out.message == m);
    CHECK(out.stats.rs_rounds <= 256);
  }
}

TEST_CASE("zero-error ciphertext") {
  const auto kp = toy(3);
  Rng rng(4);
  const auto m = random_message(*kp.pub.field, 5, rng);
  const auto c = vec_mat(m, public_generator(kp.pub));
  const auto out = decrypt(kp.sec, c);
  REQUIRE(out.message);
  CHECK(*out.message == m);
  const Elem hook_coeff = vec_mat(m, kp.sec.transform)[kp.sec.params.hooks[0]];
  CHECK(out.stats.rs_rounds == hook_coeff + 1);
}

TEST_CASE("more than tau errors never decrypt silently to a wrong message") {
  int failures = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto kp = toy(s);
    Rng rng(s + 5000);
    const auto m = random_message(*kp.pub.field, 5, rng);
    const auto c = encrypt_with_weight(kp.pub, m, seed_from_u64(s), kp.pub.tau + 1);
    const auto out = decrypt(kp.sec, c);
    if (!out.message) {
      ++failures;
      CHECK(out.stats.rs_rounds == 256);
      continue;
    }
    // a different message is acceptable only if it really is within tau
    CHECK(*out.message != m);
    CHECK(hamming_distance(vec_mat(*out.message, public_generator(kp.pub)), c) <= kp.pub.tau);
  }
  CHECK(failures > 0);
}

TEST_CASE("key serialization") {
  const auto kp = toy(7);
  const auto pub = serialize_public(kp.pub);
  const auto sec = serialize_secret(kp.sec);
  CHECK(pub.size() == kKeyHeaderBytes + 5 * 10 * 1);
  CHECK(serialize_public(deserialize_public(pub)) == pub);
  CHECK(serialize_secret(deserialize_secret(sec)) == sec);
  CHECK(deserialize_secret(sec).params == kp.sec.params);
  CHECK(peek_key_role(pub) == KeyRole::public_key);
  CHECK(peek_key_role(sec) == KeyRole::secret_key);

  auto bad = pub;
  bad[0] = 'X';
  CHECK_THROWS_AS(deserialize_public(bad), FormatError);
  bad = pub;
  bad[4] = 9;
  CHECK_THROWS_AS(deserialize_public(bad), FormatError);
  CHECK_THROWS_AS(deserialize_public(std::span<const std::uint8_t>(pub).first(pub.size() - 1)), FormatError);
  bad = pub;
  bad.push_back(0);
  CHECK_THROWS_AS(deserialize_public(bad), FormatError);
  CHECK_THROWS_AS(deserialize_public(sec), FormatError);
  CHECK_THROWS_AS(deserialize_secret(pub), FormatError);
  bad = pub;
  for (int i = 7; i < 15; ++i) bad[i] = 0;  // modulus X^8: reducible
  CHECK_THROWS_AS(deserialize_public(bad), FormatError);

  // duplicate evaluation point in the secret key
  auto raw = sec;
  const std::size_t alpha_off = kKeyHeaderBytes + 2 + 2 + 1;
  raw[alpha_off + 1] = raw[alpha_off];
  CHECK_THROWS_AS(deserialize_secret(raw), IntegrityError);
  // transform that does not produce [I | A]
  raw = sec;
  raw[raw.size() - 32 - 1] ^= 1;
  CHECK_THROWS_AS(deserialize_secret(raw), IntegrityError);
}

TEST_CASE("ciphertext and message formats") {
  const auto kp = toy(8);
  Rng rng(9);
  const auto c = encrypt(kp.pub, random_message(*kp.pub.field, 5, rng), seed_from_u64(1));
  const auto bytes = serialize_ciphertext(*kp.pub.field, c);
  CHECK(bytes.size() == 4 + 2 + 15);
  CHECK(deserialize_ciphertext(*kp.pub.field, bytes) == c);
  auto bad = bytes;
  bad[3] = '1';
  CHECK_THROWS_AS(deserialize_ciphertext(*kp.pub.field, bad), FormatError);

  CHECK(message_capacity(8, 117) == 115);
  CHECK(message_capacity(4, 5) == 0);
  const std::vector<std::uint8_t> text{'h', 'e', 'l', 'l', 'o'};
  const auto packed = pack_message(text, 8, 117);
  CHECK(packed.size() == 117);
  for (Elem e : packed) CHECK(e < 256);
  CHECK(unpack_message(packed, 8) == text);
  const auto odd = pack_message(text, 5, 40);
  CHECK(unpack_message(odd, 5) == text);
  CHECK(unpack_message(pack_message({}, 4, 5), 4).empty());
  CHECK_THROWS_AS(pack_message(std::vector<std::uint8_t>(116), 8, 117), FormatError);
  CHECK_THROWS_AS(pack_message(text, 4, 3), FormatError);
  std::vector<Elem> wide(117, 0);
  wide[5] = 0x100;
  CHECK_THROWS_AS(unpack_message(wide, 8), FormatError);
}
