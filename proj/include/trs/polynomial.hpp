#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trs/gf_tower.hpp"

namespace trs {

// Polynomial degree with a distinguished -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(static_cast<long long>(d)) {}

  constexpr bool is_neg_inf() const { return value_ < 0; }
  // Only meaningful when !is_neg_inf().
  constexpr std::size_t value() const { return static_cast<std::size_t>(value_); }

  constexpr auto operator<=>(const Degree&) const = default;
  friend constexpr bool operator<(Degree d, std::size_t bound) {
    return d.is_neg_inf() || d.value() < bound;
  }

 private:
  constexpr Degree() : value_(-1) {}
  long long value_;
};

// Dense univariate polynomial over a FieldTower, lowest degree first. The
// coefficient vector is kept normalized (no trailing zeros).
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coefficients);

  static Poly monomial(FieldPtr field, std::size_t degree, Elem coefficient = 1);
  // prod_i (X - a_i)
  static Poly from_roots(FieldPtr field, std::span<const Elem> roots);

  const FieldPtr& field() const { return field_; }
  Degree degree() const {
    return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1);
  }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const Elem> coefficients() const { return c_; }

  void set_coeff(std::size_t i, Elem value);
  void add_to_coeff(std::size_t i, Elem value) { set_coeff(i, coeff(i) ^ value); }

  Elem operator()(Elem x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  bool operator==(const Poly& o) const;

 private:
  void normalize();
  void check(const Poly& o) const;

  FieldPtr field_;
  std::vector<Elem> c_;
};

// (quotient, remainder); divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// [f(alpha_1), ..., f(alpha_n)] by Horner. Throws on repeated points.
std::vector<Elem> eval_vector(const Poly& f, std::span<const Elem> alpha);

// Evaluation without the distinctness check, for hot loops whose points are
// already validated.
std::vector<Elem> eval_vector_unchecked(const Poly& f, std::span<const Elem> alpha);

// (f * g) mod M.
Poly poly_mul_mod(const Poly& f, const Poly& g, const Poly& modulus);

// Lagrange interpolation through (xs[i], ys[i]); result has degree < xs.size().
Poly interpolate(FieldPtr field, std::span<const Elem> xs, std::span<const Elem> ys);

struct EuclidResult {
  Poly u;
  Poly v;
  Poly r;
};

// Extended Euclid on (a, b) with remainders r_0 = a, r_1 = b, ... Stops at the
// first remainder of degree < stop_degree and returns (u, v, r) with
// u*a + v*b = r. A zero remainder is never returned: if the sequence reaches
// zero first, the last nonzero remainder (the gcd) is returned instead, so
// stop_degree = 0 computes a full gcd.
EuclidResult euclid_step_sequence(const Poly& a, const Poly& b, std::size_t stop_degree);

bool has_distinct_entries(std::span<const Elem> values);

}  // namespace trs
