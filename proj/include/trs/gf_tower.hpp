#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "trs/random.hpp"

namespace trs {

// Raw element of GF(2^m) in polynomial basis: bit i is the coefficient of X^i.
// Bulk containers (polynomials, matrices) store raw values and carry the
// owning field separately.
using Elem = std::uint64_t;

// Lexicographically least irreducible polynomial of degree m over GF(2), for
// 2 <= m <= 64, with the leading X^m term dropped.
std::uint64_t default_modulus(unsigned degree);

// True iff X^m + low is irreducible over GF(2).
bool is_irreducible(unsigned degree, std::uint64_t low);

// GF(q) with q = 2^m, m = m0 * 2^levels, together with its chain of subfields
// F_{s_0} ⊂ F_{s_1} ⊂ ... ⊂ F_{s_levels} = F_q where s_i = 2^(m0 * 2^i).
// All arithmetic happens in the top field; subfield membership is a Frobenius
// fixed-point test. Immutable after construction.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> make(unsigned base_degree, unsigned levels);
  static std::shared_ptr<const FieldTower> make(unsigned base_degree, unsigned levels,
                                                std::uint64_t modulus_low);

  unsigned degree() const { return m_; }
  unsigned base_degree() const { return m0_; }
  unsigned levels() const { return levels_; }
  // Low m bits of the modulus; X^m is implicit.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t mask() const { return mask_; }
  // Degree over GF(2) of the subfield at the given level.
  unsigned subfield_degree(unsigned level) const;
  // Number of bytes of one serialized element.
  std::size_t byte_width() const { return (m_ + 7) / 8; }

  bool contains(Elem a) const { return (a & ~mask_) == 0; }
  bool same_as(const FieldTower& other) const {
    return m_ == other.m_ && m0_ == other.m0_ && modulus_ == other.modulus_;
  }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  static Elem sub(Elem a, Elem b) { return a ^ b; }
  static Elem neg(Elem a) { return a; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_shift(a, b);
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // a^(2^times)
  Elem frobenius(Elem a, unsigned times) const;

  // Image of the integer n under Z -> F_q (n * 1).
  static Elem from_integer(std::uint64_t n) { return n & 1U; }

  // x^(s_level) == x.
  bool is_in_subfield(Elem x, unsigned level) const;

  // Norm-style map x -> x^((q-1)/(s_level-1)) onto F_{s_level}.
  Elem to_subfield(Elem x, unsigned level) const;

  Elem random_nonzero(Rng& rng) const;
  Elem random_element(Rng& rng) const;
  // Uniform nonzero element of F_{s_level}.
  Elem random_subfield_nonzero(unsigned level, Rng& rng) const;

  // Element of F_{s_level} \ F_{s_{level-1}}; 1 <= level <= levels().
  Elem sample_eta(unsigned level, Rng& rng) const;

  // A generator of the multiplicative group of F_{s_level} restricted to
  // order exactly n (n | s_level - 1), drawn at random.
  Elem random_element_of_order(std::uint64_t n, unsigned level, Rng& rng) const;

  // Multiplicative order of a nonzero element, for fields with m <= 32.
  std::uint64_t order(Elem a) const;

  // y[i] += c * x[i]
  void axpy(Elem c, std::span<const Elem> x, std::span<Elem> y) const;
  // x[i] *= c
  void scale(Elem c, std::span<Elem> x) const;

  void write_element(Elem a, std::vector<std::uint8_t>& out) const;
  Elem read_element(std::span<const std::uint8_t> bytes) const;

  // Streams every element in increasing bit-pattern order.
  class Range;
  Range elements() const;

 private:
  FieldTower(unsigned base_degree, unsigned levels, std::uint64_t modulus_low);

  Elem xtime(Elem a) const {
    const bool carry = (a >> (m_ - 1)) & 1U;
    a = (a << 1) & mask_;
    return carry ? a ^ modulus_ : a;
  }
  Elem mul_shift(Elem a, Elem b) const;
  void build_tables();

  unsigned m0_;
  unsigned levels_;
  unsigned m_;
  std::uint64_t modulus_;
  std::uint64_t mask_;
  // Log/antilog tables for small fields; exp_ has 2(q-1) entries.
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

using FieldPtr = std::shared_ptr<const FieldTower>;

class FieldTower::Range {
 public:
  class iterator {
   public:
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(unsigned __int128 i) : i_(i) {}
    Elem operator*() const { return static_cast<Elem>(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator&) const = default;

   private:
    unsigned __int128 i_ = 0;
  };
  explicit Range(unsigned degree) : end_((static_cast<unsigned __int128>(1)) << degree) {}
  iterator begin() const { return iterator(0); }
  iterator end() const { return iterator(end_); }
  unsigned __int128 size() const { return end_; }

 private:
  unsigned __int128 end_;
};

inline FieldTower::Range FieldTower::elements() const { return Range(m_); }

// Checked scalar wrapper: carries its field and refuses to mix fields.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inv() const;
  bool in_subfield(unsigned level) const { return field_->is_in_subfield(value_, level); }

  bool operator==(const FieldElement& o) const;

 private:
  const FieldTower& check(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace trs
