#include "trs/cryptosystem.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

#include "trs/error.hpp"

namespace trs {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  cpp_int c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

double log2_big(const cpp_int& x) {
  const auto top = static_cast<long long>(boost::multiprecision::msb(x));
  const long long shift = top > 52 ? top - 52 : 0;
  const cpp_int head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

std::uint64_t isqrt_ceil(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : r + 1;
}

}  // namespace

SecurityEstimate security_estimate(std::size_t n, std::size_t k, double log2_q, std::size_t tau) {
  if (k == 0 || k >= n) throw ContractError("security_estimate: need 0 < k < n");
  if (tau >= n - k) throw ContractError("security_estimate: need tau < n - k");
  if (!(log2_q > 0)) throw ContractError("security_estimate: log2(q) must be positive");
  SecurityEstimate s;
  s.work_factor_log2 = log2_big(binomial(n, k)) - log2_big(binomial(n - tau, k)) +
                       3.0 * std::log2(static_cast<double>(k)) + 2.0 * std::log2(log2_q);
  s.key_size_kb = static_cast<double>(k) * static_cast<double>(n - k) * log2_q / 8192.0;
  s.tau_unique = (n - k) / 2;
  const std::uint64_t root = isqrt_ceil(static_cast<std::uint64_t>(n) * (k - 1));
  s.tau_list = root >= n ? 0 : n - root;
  const double ln_fact = std::lgamma(static_cast<double>(n) + 1.0);
  s.keyspace_log2 = ln_fact / std::log(2.0) + log2_q + std::log2(1.0 - std::exp2(-log2_q / 2.0));
  return s;
}

std::uint64_t key_size_bits(std::size_t n, std::size_t k, unsigned log2_q) {
  return static_cast<std::uint64_t>(k) * (n - k) * log2_q;
}

// ---- keys -------------------------------------------------------------------

KeyPair keygen(std::size_t n, std::size_t k, std::size_t ell, unsigned base_degree,
               FamilyVariant variant, const Seed& seed, bool relaxed) {
  Rng rng(seed);
  TwistedCodeParams p = relaxed ? tower_params(n, k, ell, base_degree, variant, rng)
                                : family_f_params(n, k, ell, base_degree, variant, rng);
  auto sys = systematic_form_with_transform(generator_matrix(p));
  SecretKey sk{std::move(p), std::move(sys.transform), (n - k) / 2, seed};
  PublicKey pk = derive_public(sk);
  return {std::move(pk), std::move(sk)};
}

PublicKey derive_public(const SecretKey& sk) {
  const auto& p = sk.params;
  CodeMatrix sys = sk.transform * generator_matrix(p);
  for (std::size_t i = 0; i < p.k; ++i)
    for (std::size_t j = 0; j < p.k; ++j)
      if (sys.at(i, j) != (i == j ? 1U : 0U))
        throw IntegrityError("secret key: transform does not bring the generator to [I | A]");
  CodeMatrix a = sys.column_range(p.k, p.n - p.k);
  a.set_role(MatrixRole::systematic_generator);
  return {p.field, p.n, p.k, sk.tau, std::move(a)};
}

CodeMatrix public_generator(const PublicKey& pk) {
  CodeMatrix g(pk.field, pk.k, pk.n, MatrixRole::systematic_generator);
  for (std::size_t i = 0; i < pk.k; ++i) {
    g.at(i, i) = 1;
    for (std::size_t j = 0; j < pk.n - pk.k; ++j) g.at(i, pk.k + j) = pk.a.at(i, j);
  }
  return g;
}

std::vector<Elem> random_error(const FieldTower& field, std::size_t n, std::size_t weight, Rng& rng) {
  if (weight > n) throw ContractError("random_error: weight exceeds length");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < weight; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  std::vector<Elem> e(n, 0);
  for (std::size_t i = 0; i < weight; ++i) e[idx[i]] = field.random_nonzero(rng);
  return e;
}

std::vector<Elem> encrypt_with_weight(const PublicKey& pk, std::span<const Elem> message,
                                      const Seed& seed, std::size_t weight) {
  if (message.size() != pk.k) throw ContractError("encrypt: message length must equal k");
  for (Elem m : message)
    if (!pk.field->contains(m)) throw ContractError("encrypt: message symbol outside the field");
  std::vector<Elem> c(pk.n);
  std::copy(message.begin(), message.end(), c.begin());
  const auto redundancy = vec_mat(message, pk.a);
  std::copy(redundancy.begin(), redundancy.end(), c.begin() + static_cast<std::ptrdiff_t>(pk.k));
  Rng rng(seed);
  const auto e = random_error(*pk.field, pk.n, weight, rng);
  for (std::size_t i = 0; i < pk.n; ++i) c[i] ^= e[i];
  return c;
}

std::vector<Elem> encrypt(const PublicKey& pk, std::span<const Elem> message, const Seed& seed) {
  return encrypt_with_weight(pk, message, seed, pk.tau);
}

DecryptOutcome decrypt(const SecretKey& sk, std::span<const Elem> ciphertext,
                       const TwistedDecodeOptions& options) {
  const auto& p = sk.params;
  if (ciphertext.size() != p.n) throw ContractError("decrypt: ciphertext length != n");
  for (Elem c : ciphertext)
    if (!p.field->contains(c)) throw ContractError("decrypt: ciphertext symbol outside the field");
  auto outcome = twisted_decode(ciphertext, p, sk.tau, options);
  DecryptOutcome out{std::nullopt, outcome.stats};
  if (!outcome.result) return out;
  std::vector<Elem> m(outcome.result->codeword.begin(),
                      outcome.result->codeword.begin() + static_cast<std::ptrdiff_t>(p.k));
  if (vec_mat(m, sk.transform) != outcome.result->message) return out;
  out.message = std::move(m);
  return out;
}

// ---- byte formats -----------------------------------------------------------

namespace {

constexpr char kKeyMagic[4] = {'T', 'R', 'S', '1'};
constexpr char kCipherMagic[4] = {'T', 'R', 'S', 'C'};

class Writer {
 public:
  void raw(const char* s, std::size_t len) { out_.insert(out_.end(), s, s + len); }
  void u8(std::uint64_t v) { le(v, 1); }
  void u16(std::uint64_t v) {
    if (v > 0xFFFF) throw ContractError("value does not fit the u16 field of the format");
    le(v, 2);
  }
  void u64(std::uint64_t v) { le(v, 8); }
  void elem(const FieldTower& f, Elem a) { f.write_element(a, out_); }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  void le(std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::span<const std::uint8_t> take(std::size_t n) {
    if (in_.size() - pos_ < n) throw FormatError("truncated input");
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint64_t le(std::size_t bytes) {
    auto s = take(bytes);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(s[i]) << (8 * i);
    return v;
  }
  Elem elem(const FieldTower& f) { return f.read_element(take(f.byte_width())); }
  void expect_end() const {
    if (pos_ != in_.size()) throw FormatError("trailing bytes after payload");
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void write_header(Writer& w, KeyRole role, const FieldTower& f, std::size_t ell, std::size_t n,
                  std::size_t k, std::size_t tau) {
  w.raw(kKeyMagic, 4);
  w.u8(kKeyFormatVersion);
  w.u8(static_cast<std::uint8_t>(role));
  w.u8(f.base_degree());
  w.u64(f.modulus());
  w.u8(ell);
  w.u16(n);
  w.u16(k);
  w.u16(tau);
}

struct Header {
  KeyRole role;
  FieldPtr field;
  std::size_t ell, n, k, tau;
};

Header read_header(Reader& r) {
  auto magic = r.take(4);
  if (std::memcmp(magic.data(), kKeyMagic, 4) != 0) throw FormatError("bad key magic");
  if (r.le(1) != kKeyFormatVersion) throw FormatError("unsupported key format version");
  const auto role = r.le(1);
  if (role > 1) throw FormatError("unknown key role");
  const auto m0 = static_cast<unsigned>(r.le(1));
  const std::uint64_t modulus = r.le(8);
  const auto ell = static_cast<std::size_t>(r.le(1));
  Header h{static_cast<KeyRole>(role), nullptr, ell, 0, 0, 0};
  h.n = r.le(2);
  h.k = r.le(2);
  h.tau = r.le(2);
  if (ell > 6 || m0 == 0 || (static_cast<std::uint64_t>(m0) << ell) > 64)
    throw FormatError("field descriptor mismatch: unsupported tower degree");
  try {
    h.field = FieldTower::make(m0, static_cast<unsigned>(ell), modulus);
  } catch (const ContractError& e) {
    throw FormatError(std::string("field descriptor mismatch: ") + e.what());
  }
  if (h.k == 0 || h.k >= h.n) throw FormatError("key header: need 0 < k < n");
  if (h.tau > (h.n - h.k) / 2) throw IntegrityError("key header: tau exceeds floor((n-k)/2)");
  return h;
}

}  // namespace

KeyRole peek_key_role(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  return read_header(r).role;
}

std::vector<std::uint8_t> serialize_public(const PublicKey& pk) {
  Writer w;
  write_header(w, KeyRole::public_key, *pk.field, pk.field->levels(), pk.n, pk.k, pk.tau);
  for (Elem a : pk.a.entries()) w.elem(*pk.field, a);
  return w.take();
}

PublicKey deserialize_public(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  Header h = read_header(r);
  if (h.role != KeyRole::public_key) throw FormatError("expected a public key");
  CodeMatrix a(h.field, h.k, h.n - h.k, MatrixRole::systematic_generator);
  for (std::size_t i = 0; i < h.k; ++i)
    for (std::size_t j = 0; j < h.n - h.k; ++j) a.at(i, j) = r.elem(*h.field);
  r.expect_end();
  return {h.field, h.n, h.k, h.tau, std::move(a)};
}

std::vector<std::uint8_t> serialize_secret(const SecretKey& sk) {
  const auto& p = sk.params;
  if (p.field->levels() != p.ell())
    throw ContractError("serialize_secret: the key format requires tower levels == number of twists");
  Writer w;
  write_header(w, KeyRole::secret_key, *p.field, p.ell(), p.n, p.k, sk.tau);
  for (auto t : p.twists) w.u16(t);
  for (auto h : p.hooks) w.u16(h);
  for (auto e : p.eta) w.elem(*p.field, e);
  for (auto a : p.alpha) w.elem(*p.field, a);
  for (auto t : sk.transform.entries()) w.elem(*p.field, t);
  w.raw(reinterpret_cast<const char*>(sk.seed.data()), sk.seed.size());
  return w.take();
}

SecretKey deserialize_secret(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  Header h = read_header(r);
  if (h.role != KeyRole::secret_key) throw FormatError("expected a secret key");
  TwistedCodeParams p;
  p.field = h.field;
  p.n = h.n;
  p.k = h.k;
  for (std::size_t i = 0; i < h.ell; ++i) p.twists.push_back(r.le(2));
  for (std::size_t i = 0; i < h.ell; ++i) p.hooks.push_back(r.le(2));
  for (std::size_t i = 0; i < h.ell; ++i) p.eta.push_back(r.elem(*h.field));
  for (std::size_t i = 0; i < h.n; ++i) p.alpha.push_back(r.elem(*h.field));
  CodeMatrix t(h.field, h.k, h.k);
  for (std::size_t i = 0; i < h.k; ++i)
    for (std::size_t j = 0; j < h.k; ++j) t.at(i, j) = r.elem(*h.field);
  Seed seed{};
  auto s = r.take(seed.size());
  std::copy(s.begin(), s.end(), seed.begin());
  r.expect_end();
  if (auto v = validate_params(p); !v.empty()) throw IntegrityError("secret key: " + v.front());
  SecretKey sk{std::move(p), std::move(t), h.tau, seed};
  derive_public(sk);  // checks T * G = [I | A]
  return sk;
}

std::vector<std::uint8_t> serialize_ciphertext(const FieldTower& field, std::span<const Elem> c) {
  Writer w;
  w.raw(kCipherMagic, 4);
  w.u16(c.size());
  for (Elem e : c) w.elem(field, e);
  return w.take();
}

std::vector<Elem> deserialize_ciphertext(const FieldTower& field, std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto magic = r.take(4);
  if (std::memcmp(magic.data(), kCipherMagic, 4) != 0) throw FormatError("bad ciphertext magic");
  const auto n = static_cast<std::size_t>(r.le(2));
  std::vector<Elem> c(n);
  for (auto& e : c) e = r.elem(field);
  r.expect_end();
  return c;
}

// ---- message codec ----------------------------------------------------------

std::size_t message_capacity(unsigned base_degree, std::size_t k) {
  const std::size_t bits = static_cast<std::size_t>(base_degree) * k;
  return bits < 16 ? 0 : std::min<std::size_t>((bits - 16) / 8, 0xFFFF);
}

std::vector<Elem> pack_message(std::span<const std::uint8_t> bytes, unsigned base_degree, std::size_t k) {
  if (base_degree == 0 || base_degree > 64) throw ContractError("pack_message: bad chunk width");
  if (static_cast<std::size_t>(base_degree) * k < 16)
    throw FormatError("message space too small for the length prefix");
  if (bytes.size() > message_capacity(base_degree, k))
    throw FormatError("message of " + std::to_string(bytes.size()) + " bytes exceeds capacity of " +
                      std::to_string(message_capacity(base_degree, k)));
  std::vector<std::uint8_t> stream{static_cast<std::uint8_t>(bytes.size()),
                                   static_cast<std::uint8_t>(bytes.size() >> 8)};
  stream.insert(stream.end(), bytes.begin(), bytes.end());
  std::vector<Elem> out(k, 0);
  for (std::size_t bit = 0; bit < stream.size() * 8; ++bit)
    if ((stream[bit / 8] >> (bit % 8)) & 1U) out[bit / base_degree] |= Elem{1} << (bit % base_degree);
  return out;
}

std::vector<std::uint8_t> unpack_message(std::span<const Elem> message, unsigned base_degree) {
  if (base_degree == 0 || base_degree > 64) throw ContractError("unpack_message: bad chunk width");
  const std::size_t bits = message.size() * base_degree;
  if (bits < 16) throw FormatError("message space too small for the length prefix");
  for (Elem e : message)
    if (base_degree < 64 && (e >> base_degree) != 0)
      throw FormatError("message symbol is not an m0-bit chunk");
  auto bit_at = [&](std::size_t i) { return (message[i / base_degree] >> (i % base_degree)) & 1U; };
  auto byte_at = [&](std::size_t b) {
    std::uint8_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v |= static_cast<std::uint8_t>(bit_at(8 * b + i) << i);
    return v;
  };
  const std::size_t len = byte_at(0) | (static_cast<std::size_t>(byte_at(1)) << 8);
  if (len > message_capacity(base_degree, message.size()))
    throw FormatError("message length prefix exceeds capacity");
  std::vector<std::uint8_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = byte_at(2 + i);
  return out;
}

}  // namespace trs
