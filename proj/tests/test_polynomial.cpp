#include <doctest.h>

#include "trs/error.hpp"
#include "trs/polynomial.hpp"

using namespace trs;

namespace {

Poly random_poly(const FieldPtr& f, std::size_t len, Rng& rng) {
  std::vector<Elem> c(len);
  for (auto& x : c) x = f->random_element(rng);
  return Poly(f, c);
}

std::vector<Elem> distinct_points(const FieldPtr& f, std::size_t n, Rng& rng) {
  std::vector<Elem> pts;
  while (pts.size() < n) {
    const Elem x = f->random_element(rng);
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  return pts;
}

}  // namespace

TEST_CASE("degree sentinel") {
  auto f = FieldTower::make(4, 1);
  Poly zero(f);
  CHECK(zero.is_zero());
  CHECK(zero.degree().is_neg_inf());
  CHECK(zero.degree() < Degree(0));
  CHECK(zero.degree() < std::size_t{0});
  CHECK(Poly(f, {1, 0, 0}).degree() == Degree(0));
  CHECK_FALSE(Degree(3) < std::size_t{3});
}

TEST_CASE("eval_vector basics") {
  auto f = FieldTower::make(3, 0);
  const Elem g = 2;
  std::vector<Elem> alpha{1, g, f->sqr(g)};
  CHECK(eval_vector(Poly(f, {1}), alpha) == std::vector<Elem>{1, 1, 1});
  CHECK(eval_vector(Poly::monomial(f, 1), alpha) == alpha);
  CHECK(eval_vector(Poly::monomial(f, 2), alpha) ==
        std::vector<Elem>{1, f->pow(g, 2), f->pow(g, 4)});
  std::vector<Elem> dup{1, 2, 1};
  CHECK_THROWS_AS(eval_vector(Poly(f, {1}), dup), ContractError);
}

TEST_CASE("evaluation is linear") {
  auto f = FieldTower::make(4, 1);
  Rng rng(1);
  const auto alpha = distinct_points(f, 30, rng);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(f, 20, rng), b = random_poly(f, 25, rng);
    const Elem c = f->random_element(rng);
    const auto lhs = eval_vector(a + b.scaled(c), alpha);
    auto rhs = eval_vector(a, alpha);
    f->axpy(c, eval_vector(b, alpha), rhs);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("divmod identity") {
  auto f = FieldTower::make(8, 1);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(f, 1 + rng.below(40), rng);
    Poly b = random_poly(f, 1 + rng.below(20), rng);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(Poly(f, {1}), Poly(f)), DivisionByZero);
}

TEST_CASE("poly_mul_mod") {
  auto f = FieldTower::make(4, 1);
  Rng rng(3);
  const Poly m = random_poly(f, 12, rng) + Poly::monomial(f, 11);
  const Poly g = random_poly(f, 15, rng);
  CHECK(poly_mul_mod(g, Poly(f, {1}), m) == divmod(g, m).second);
  // cyclic reduction modulo X^n - 1
  const std::size_t n = 15;
  const Poly xn1 = Poly::monomial(f, n) + Poly(f, {1});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      CHECK(poly_mul_mod(Poly::monomial(f, a), Poly::monomial(f, b), xn1) ==
            Poly::monomial(f, (a + b) % n));
  // no reduction when the product is already short
  const Poly s = random_poly(f, 5, rng), t = random_poly(f, 6, rng);
  CHECK(poly_mul_mod(s, t, m) == s * t);
  CHECK_THROWS(poly_mul_mod(s, t, Poly(f)));
}

TEST_CASE("evaluation vanishes on multiples of prod(X - alpha_i)") {
  auto f = FieldTower::make(4, 1);
  Rng rng(4);
  const auto alpha = distinct_points(f, 20, rng);
  const Poly m = Poly::from_roots(f, alpha);
  CHECK(m.degree() == Degree(20));
  for (Elem a : alpha) CHECK(m(a) == 0);
  for (int i = 0; i < 30; ++i) {
    const Poly g = random_poly(f, 2 * alpha.size() + 1, rng);
    CHECK(eval_vector(g, alpha) == eval_vector(divmod(g, m).second, alpha));
  }
}

TEST_CASE("interpolation") {
  auto f = FieldTower::make(8, 1);
  Rng rng(5);
  std::vector<Elem> x1{7}, y1{42};
  CHECK(interpolate(f, x1, y1) == Poly(f, {42}));
  const auto alpha = distinct_points(f, 40, rng);
  CHECK(interpolate(f, alpha, alpha) == Poly::monomial(f, 1));
  for (int i = 0; i < 50; ++i) {
    const Poly g = random_poly(f, 1 + rng.below(40), rng);
    CHECK(interpolate(f, alpha, eval_vector(g, alpha)) == g);
  }
  std::vector<Elem> dup{1, 1}, ys{2, 3};
  CHECK_THROWS_AS(interpolate(f, dup, ys), ContractError);
}

TEST_CASE("extended Euclid") {
  auto f = FieldTower::make(4, 1);
  Rng rng(6);
  const Poly a = random_poly(f, 12, rng);
  {
    const auto [u, v, r] = euclid_step_sequence(a, Poly(f), 3);
    CHECK(u == Poly(f, {1}));
    CHECK(v.is_zero());
    CHECK(r == a);
  }
  for (int i = 0; i < 100; ++i) {
    const Poly x = random_poly(f, 20, rng) + Poly::monomial(f, 20);
    const Poly y = random_poly(f, 1 + rng.below(20), rng);
    const std::size_t stop = rng.below(20);
    const auto [u, v, r] = euclid_step_sequence(x, y, stop);
    CHECK(u * x + v * y == r);
    if (!(r.degree() < stop)) {
      // ran to the gcd: r divides both inputs
      CHECK(divmod(x, r).second.is_zero());
      CHECK(divmod(y, r).second.is_zero());
    }
  }
  // stop 0 gives the gcd
  const Poly common = Poly::from_roots(f, std::vector<Elem>{3, 9});
  const Poly x = common * (Poly::monomial(f, 5) + Poly(f, {1}));
  const Poly y = common * (Poly::monomial(f, 2) + Poly(f, {5}));
  const auto [u, v, r] = euclid_step_sequence(x, y, 0);
  CHECK(r.degree() == Degree(2));
  CHECK(divmod(r, common).second.is_zero());
}

TEST_CASE("mixing fields is rejected") {
  auto f = FieldTower::make(4, 1);
  auto g = FieldTower::make(3, 1);
  CHECK_THROWS_AS(Poly(f, {1}) + Poly(g, {1}), FieldMismatch);
}
