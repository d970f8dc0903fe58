#include "trs/gf_tower.hpp"

#include <array>
#include <string>

#include "trs/error.hpp"

namespace trs {

namespace {

// Lexicographically least irreducible polynomial of each degree 2..64
// (leading term dropped). Verified at construction.
constexpr std::array<std::uint64_t, 63> kModuli = {
    0x3,  0x3,  0x3,  0x5,  0x3,  0x3,  0x1b, 0x3,  0x9,  0x5,  0x9,  0x1b, 0x21,
    0x3,  0x2b, 0x9,  0x9,  0x27, 0x9,  0x5,  0x3,  0x21, 0x1b, 0x9,  0x1b, 0x27,
    0x3,  0x5,  0x3,  0x9,  0x8d, 0x4b, 0x1b, 0x5,  0x35, 0x3f, 0x63, 0x11, 0x39,
    0x9,  0x27, 0x59, 0x21, 0x1b, 0x3,  0x21, 0x2d, 0x71, 0x1d, 0x4b, 0x9,  0x47,
    0x7d, 0x47, 0x95, 0x11, 0x63, 0x7b, 0x3,  0x27, 0x69, 0x3,  0x1b};

constexpr unsigned kTableMaxDegree = 20;

using U128 = unsigned __int128;

int deg128(U128 a) {
  int d = -1;
  while (a != 0) {
    a >>= 1;
    ++d;
  }
  return d;
}

U128 gf2_gcd(U128 a, U128 b) {
  while (b != 0) {
    int da = deg128(a);
    const int db = deg128(b);
    while (da >= db) {
      a ^= b << (da - db);
      da = deg128(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Multiply modulo X^m + low for an arbitrary (possibly reducible) low.
std::uint64_t mulmod_raw(std::uint64_t a, std::uint64_t b, unsigned m, std::uint64_t low) {
  const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    const bool carry = (a >> (m - 1)) & 1U;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t default_modulus(unsigned degree) {
  if (degree < 2 || degree > 64)
    throw ContractError("unsupported field degree " + std::to_string(degree));
  return kModuli[degree - 2];
}

bool is_irreducible(unsigned m, std::uint64_t low) {
  if (m < 2 || m > 64) return false;
  if (m < 64 && (low >> m) != 0) return false;
  if ((low & 1U) == 0) return false;  // divisible by X
  const U128 f = (static_cast<U128>(1) << m) | low;
  // x^(2^d) mod f for d = 1..m; f is irreducible iff x^(2^m) = x and
  // gcd(x^(2^d) - x, f) = 1 for each proper divisor d of m.
  const std::uint64_t x = 2;
  std::uint64_t p = x;
  for (unsigned d = 1; d <= m; ++d) {
    p = mulmod_raw(p, p, m, low);
    if (d < m && m % d == 0 && gf2_gcd(f, static_cast<U128>(p ^ x)) != 1) return false;
  }
  return p == x;
}

FieldTower::FieldTower(unsigned base_degree, unsigned levels, std::uint64_t modulus_low)
    : m0_(base_degree), levels_(levels), m_(0), modulus_(modulus_low), mask_(0) {
  if (base_degree == 0 || levels > 6 || (static_cast<std::uint64_t>(base_degree) << levels) > 64)
    throw ContractError("field tower degree m0*2^levels must lie in [2, 64]");
  m_ = base_degree << levels;
  if (m_ < 2) throw ContractError("field tower degree must be at least 2");
  mask_ = m_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m_) - 1);
  if (!is_irreducible(m_, modulus_))
    throw ContractError("modulus is not irreducible of degree " + std::to_string(m_));
  if (m_ <= kTableMaxDegree) build_tables();
}

FieldPtr FieldTower::make(unsigned base_degree, unsigned levels) {
  const std::uint64_t m = static_cast<std::uint64_t>(base_degree) << levels;
  if (m < 2 || m > 64) throw ContractError("field tower degree m0*2^levels must lie in [2, 64]");
  return make(base_degree, levels, default_modulus(static_cast<unsigned>(m)));
}

FieldPtr FieldTower::make(unsigned base_degree, unsigned levels, std::uint64_t modulus_low) {
  return FieldPtr(new FieldTower(base_degree, levels, modulus_low));
}

void FieldTower::build_tables() {
  const std::uint64_t q1 = mask_;  // q - 1
  const auto factors = prime_factors(q1);
  Elem g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (auto p : factors) {
      // pow via the shift multiplier: tables do not exist yet
      Elem r = 1, b = g;
      for (std::uint64_t e = q1 / p; e != 0; e >>= 1) {
        if (e & 1U) r = mul_shift(r, b);
        b = mul_shift(b, b);
      }
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  log_.assign(q1 + 1, 0);
  exp_.assign(2 * q1, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < q1; ++i) {
    exp_[i] = x;
    exp_[i + q1] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_shift(x, g);
  }
}

Elem FieldTower::mul_shift(Elem a, Elem b) const {
  Elem r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a = xtime(a);
  }
  return r;
}

unsigned FieldTower::subfield_degree(unsigned level) const {
  if (level > levels_) throw ContractError("subfield level out of range");
  return m0_ << level;
}

Elem FieldTower::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  if (!log_.empty()) return exp_[mask_ - log_[a]];
  // a^(q-2)
  return pow(a, mask_ - 1);
}

Elem FieldTower::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    e >>= 1;
    if (e != 0) a = mul(a, a);
  }
  return r;
}

Elem FieldTower::frobenius(Elem a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = mul(a, a);
  return a;
}

bool FieldTower::is_in_subfield(Elem x, unsigned level) const {
  if (level > levels_) throw ContractError("subfield level out of range");
  return frobenius(x, subfield_degree(level)) == x;
}

Elem FieldTower::to_subfield(Elem x, unsigned level) const {
  const unsigned d = subfield_degree(level);
  if (d == m_) return x;
  // (2^m - 1) / (2^d - 1) = sum_{j < m/d} 2^(j*d)
  std::uint64_t e = 0;
  for (unsigned j = 0; j < m_ / d; ++j) e |= std::uint64_t{1} << (j * d);
  return pow(x, e);
}

Elem FieldTower::random_element(Rng& rng) const {
  return m_ == 64 ? rng.next_u64() : rng.below(mask_ + 1);
}

Elem FieldTower::random_nonzero(Rng& rng) const { return rng.between(1, mask_); }

Elem FieldTower::random_subfield_nonzero(unsigned level, Rng& rng) const {
  return to_subfield(random_nonzero(rng), level);
}

Elem FieldTower::sample_eta(unsigned level, Rng& rng) const {
  if (level < 1 || level > levels_) throw ContractError("sample_eta: level must lie in [1, levels]");
  for (;;) {
    const Elem y = random_subfield_nonzero(level, rng);
    if (!is_in_subfield(y, level - 1)) return y;
  }
}

Elem FieldTower::random_element_of_order(std::uint64_t n, unsigned level, Rng& rng) const {
  const unsigned d = subfield_degree(level);
  const std::uint64_t group = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  if (n == 0 || group % n != 0)
    throw ContractError("order " + std::to_string(n) + " does not divide the subfield group order");
  const auto factors = prime_factors(n);
  for (;;) {
    const Elem y = pow(random_subfield_nonzero(level, rng), group / n);
    bool exact = true;
    for (auto p : factors) {
      if (pow(y, n / p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return y;
  }
}

std::uint64_t FieldTower::order(Elem a) const {
  if (a == 0) throw DivisionByZero();
  if (m_ > 48) throw ContractError("order(): field too large to factor q-1");
  std::uint64_t ord = mask_;
  for (auto p : prime_factors(mask_)) {
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

void FieldTower::axpy(Elem c, std::span<const Elem> x, std::span<Elem> y) const {
  if (c == 0) return;
  const std::size_t len = x.size();
  if (!log_.empty()) {
    const std::uint32_t lc = log_[c];
    const Elem* e = exp_.data();
    const std::uint32_t* lg = log_.data();
    for (std::size_t i = 0; i < len; ++i) {
      const Elem xi = x[i];
      if (xi != 0) y[i] ^= e[lc + lg[xi]];
    }
    return;
  }
  for (std::size_t i = 0; i < len; ++i) y[i] ^= mul(c, x[i]);
}

void FieldTower::scale(Elem c, std::span<Elem> x) const {
  for (auto& v : x) v = mul(c, v);
}

void FieldTower::write_element(Elem a, std::vector<std::uint8_t>& out) const {
  for (std::size_t i = 0; i < byte_width(); ++i) out.push_back(static_cast<std::uint8_t>(a >> (8 * i)));
}

Elem FieldTower::read_element(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() < byte_width()) throw FormatError("truncated field element");
  Elem a = 0;
  for (std::size_t i = 0; i < byte_width(); ++i) a |= Elem{bytes[i]} << (8 * i);
  if (!contains(a)) throw FormatError("field element has bits above the field degree");
  return a;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw ContractError("FieldElement without a field");
  if (!field_->contains(value_)) throw ContractError("value exceeds field degree");
}

const FieldTower& FieldElement::check(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw FieldMismatch();
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, value_ ^ o.value_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + o; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, check(o).mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, check(o).div(value_, o.value_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return value_ == o.value_;
}

}  // namespace trs
