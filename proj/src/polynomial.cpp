#include "trs/polynomial.hpp"

#include <algorithm>

#include "trs/error.hpp"

namespace trs {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw ContractError("Poly without a field");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
  if (!field_) throw ContractError("Poly without a field");
  for (auto c : c_)
    if (!field_->contains(c)) throw ContractError("coefficient exceeds field degree");
  normalize();
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem coefficient) {
  Poly p(std::move(field));
  p.set_coeff(degree, coefficient);
  return p;
}

Poly Poly::from_roots(FieldPtr field, std::span<const Elem> roots) {
  std::vector<Elem> c{1};
  c.reserve(roots.size() + 1);
  const FieldTower& f = *field;
  for (Elem a : roots) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] ^ f.mul(a, c[i]);
    c[0] = f.mul(a, c[0]);
  }
  return Poly(std::move(field), std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check(const Poly& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw FieldMismatch();
}

void Poly::set_coeff(std::size_t i, Elem value) {
  if (i >= c_.size()) {
    if (value == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = value;
  normalize();
}

Elem Poly::operator()(Elem x) const {
  Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->mul(acc, x) ^ *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  check(o);
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] ^= o.c_[i];
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    field_->axpy(c_[i], o.c_, std::span<Elem>(c).subspan(i, o.c_.size()));
  }
  return Poly(field_, std::move(c));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> c = c_;
  field_->scale(s, c);
  return Poly(field_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
  check(o);
  return c_ == o.c_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  const FieldPtr& field = a.field();
  const FieldTower& f = *field;
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> r(a.coefficients().begin(), a.coefficients().end());
  if (r.size() <= db) return {Poly(field), a};
  std::vector<Elem> q(r.size() - db, 0);
  const Elem lead_inv = f.inv(bc.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Elem coef = f.mul(r[i], lead_inv);
    q[i - db] = coef;
    f.axpy(coef, bc, std::span<Elem>(r).subspan(i - db, bc.size()));
  }
  r.resize(db);
  return {Poly(field, std::move(q)), Poly(field, std::move(r))};
}

bool has_distinct_entries(std::span<const Elem> values) {
  std::vector<Elem> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::vector<Elem> eval_vector_unchecked(const Poly& f, std::span<const Elem> alpha) {
  std::vector<Elem> out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = f(alpha[i]);
  return out;
}

std::vector<Elem> eval_vector(const Poly& f, std::span<const Elem> alpha) {
  if (!has_distinct_entries(alpha)) throw ContractError("evaluation points are not distinct");
  return eval_vector_unchecked(f, alpha);
}

Poly poly_mul_mod(const Poly& f, const Poly& g, const Poly& modulus) {
  if (modulus.is_zero()) throw DivisionByZero();
  return divmod(f * g, modulus).second;
}

Poly interpolate(FieldPtr field, std::span<const Elem> xs, std::span<const Elem> ys) {
  if (xs.size() != ys.size()) throw ContractError("interpolate: coordinate count mismatch");
  if (!has_distinct_entries(xs)) throw ContractError("interpolate: duplicate x-coordinates");
  const std::size_t n = xs.size();
  if (n == 0) return Poly(field);
  const FieldTower& f = *field;
  const Poly m = Poly::from_roots(field, xs);
  const auto mc = m.coefficients();
  std::vector<Elem> acc(n, 0);
  std::vector<Elem> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ys[i] == 0) continue;
    // basis = M / (X - x_i) by synthetic division
    Elem carry = 0;
    for (std::size_t j = n; j-- > 0;) {
      carry = mc[j + 1] ^ f.mul(carry, xs[i]);
      basis[j] = carry;
    }
    // basis(x_i) = prod_{j != i} (x_i - x_j)
    Elem denom = 0;
    for (std::size_t j = n; j-- > 0;) denom = f.mul(denom, xs[i]) ^ basis[j];
    f.axpy(f.div(ys[i], denom), basis, acc);
  }
  return Poly(std::move(field), std::move(acc));
}

EuclidResult euclid_step_sequence(const Poly& a, const Poly& b, std::size_t stop_degree) {
  const FieldPtr& field = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::monomial(field, 0), u1(field);
  Poly v0(field), v1 = Poly::monomial(field, 0);
  if (r0.degree() < stop_degree && !r0.is_zero()) return {u0, v0, r0};
  while (!r1.is_zero()) {
    if (r1.degree() < stop_degree) return {u1, v1, r1};
    auto [q, r2] = divmod(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {u0, v0, r0};
}

}  // namespace trs
