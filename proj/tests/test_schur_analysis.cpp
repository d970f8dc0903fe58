#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "trs/error.hpp"
#include "trs/polynomial.hpp"
#include "trs/schur_analysis.hpp"

using namespace trs;

namespace {

CodeMatrix random_code(const FieldPtr& f, std::size_t k, std::size_t n, Rng& rng) {
  CodeMatrix g(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = f->random_element(rng);
  return g;
}

TwistedCodeParams rs_code(std::size_t n, std::size_t k, unsigned m) {
  auto f = FieldTower::make(m, 0);
  std::vector<Elem> alpha;
  for (Elem a = 1; alpha.size() < n; ++a) alpha.push_back(a);
  return rs_params(f, alpha, k);
}

// |{a + b : a, b in S} ∩ [0, n)| by direct double loop over an explicit set.
std::size_t sumset_oracle(const TwistedCodeParams& p) {
  std::set<std::size_t> s;
  for (std::size_t j = 0; j < p.k; ++j)
    if (std::find(p.hooks.begin(), p.hooks.end(), j) == p.hooks.end()) s.insert(j);
  for (auto t : p.twists) s.insert(t + p.k - 1);
  std::set<std::size_t> d;
  for (auto a : s)
    for (auto b : s)
      if (a + b < p.n) d.insert(a + b);
  return d.size();
}

}  // namespace

TEST_CASE("schur product") {
  auto f = FieldTower::make(4, 0);
  Rng rng(1);
  std::vector<Elem> x(9), y(9), ones(9, 1), zero(9, 0);
  for (auto& v : x) v = f->random_element(rng);
  for (auto& v : y) v = f->random_element(rng);
  CHECK(schur_product(*f, x, ones) == x);
  CHECK(schur_product(*f, x, zero) == zero);
  CHECK(schur_product(*f, x, y) == schur_product(*f, y, x));
  CHECK_THROWS_AS(schur_product(*f, x, std::vector<Elem>(3)), ContractError);
}

TEST_CASE("square dimension of RS codes") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{15, 5}, {31, 10}, {15, 7}}) {
    const auto g = generator_matrix(rs_code(n, k, 5));
    CHECK(square_dimension(g) == 2 * k - 1);
    CHECK(square_dimension(g, kernels::Exec::serial) == 2 * k - 1);
  }
  CHECK(square_dimension(generator_matrix(rs_code(15, 1, 4))) == 1);
  CHECK(square_dimension(generator_matrix(rs_code(15, 10, 4))) == 15);
  auto f = FieldTower::make(4, 0);
  CodeMatrix deficient(f, 2, 5, std::vector<Elem>{1, 2, 3, 4, 5, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(square_dimension(deficient), ContractError);
}

TEST_CASE("shortening") {
  const auto p = rs_code(15, 5, 4);
  const auto g = generator_matrix(p);
  CHECK(shortened_square_dimension(g, std::vector<std::size_t>{}) == square_dimension(g));
  // oracle: the shortened RS code is spanned by ev((X - a_p) X^j), j < k - 1
  for (std::size_t pos = 0; pos < 15; ++pos) {
    std::vector<std::size_t> at{pos};
    const auto s = shorten(g, at);
    CHECK(s.rows() == 4);
    CHECK(s.cols() == 14);
    std::vector<Elem> rest;
    for (std::size_t i = 0; i < 15; ++i)
      if (i != pos) rest.push_back(p.alpha[i]);
    CodeMatrix o(p.field, 4, 14);
    for (std::size_t j = 0; j < 4; ++j) {
      const Poly q = Poly::monomial(p.field, j) * Poly::from_roots(p.field, std::vector<Elem>{p.alpha[pos]});
      const auto ev = eval_vector(q, rest);
      std::copy(ev.begin(), ev.end(), o.row(j).begin());
    }
    CHECK(same_row_space(s, o));
    CHECK(shortened_square_dimension(g, at) == 2 * (5 - 1) - 1);
    CHECK(kernels::serial::rank(kernels::serial::schur_products(o)) == 7);
  }
  std::vector<std::size_t> two{3, 9};
  CHECK(shortened_square_dimension(g, two) == 2 * (5 - 2) - 1);
  std::vector<std::size_t> three{1, 2, 3};
  CHECK_THROWS_AS(shortened_square_dimension(g, three), ContractError);
  std::vector<std::size_t> rep{2, 2};
  CHECK_THROWS_AS(shorten(g, rep), ContractError);
  const auto k1 = generator_matrix(rs_code(7, 1, 3));
  std::vector<std::size_t> one{0};
  CHECK_THROWS_AS(shorten(k1, one), ContractError);
}

TEST_CASE("degree-set bound") {
  Rng eta_rng(1);
  TwistedCodeParams p;
  p.field = FieldTower::make(3, 1);
  p.n = 7;
  p.k = 3;
  p.twists = {1};
  p.hooks = {2};
  p.eta = {p.field->sample_eta(1, eta_rng)};
  for (Elem a = 1; a <= 7; ++a) p.alpha.push_back(a);
  CHECK(degree_bound_sumset(p) == 6);
  CHECK(sumset_oracle(p) == 6);

  Rng rng(2);
  const auto fam = family_f_params(255, 117, 1, 8, FamilyVariant::F, rng);
  CHECK(degree_bound_sumset(fam) == 255);
  CHECK(degree_bound_sumset(rs_code(31, 10, 5)) == 19);
  CHECK(degree_bound_sumset(rs_code(31, 20, 5)) == 31);
  for (int i = 0; i < 50; ++i) {
    const auto q = tower_params(15, 2 + rng.below(10), 1 + rng.below(2), 4, FamilyVariant::F, rng);
    CHECK(degree_bound_sumset(q) == sumset_oracle(q));
  }
}

TEST_CASE("remainder-degree bound") {
  CHECK(degree_bound_remainder(rs_code(31, 10, 5)) == 19);
  Rng rng(3);
  // multiplicative group: the modulus is X^n - 1
  const auto p = tower_params(15, 5, 1, 4, FamilyVariant::F_tilde, rng);
  const Poly m = Poly::from_roots(p.field, p.alpha);
  CHECK(m == Poly::monomial(p.field, 15) + Poly(p.field, {1}));
  for (int i = 0; i < 30; ++i) {
    const auto q = tower_params(15, 2 + rng.below(6), 1, 4, FamilyVariant::F, rng);
    const auto dim = square_dimension(generator_matrix(q));
    CHECK(degree_bound_remainder(q) <= dim);
    CHECK(degree_bound_sumset(q) <= dim);
  }
}

TEST_CASE("GRS envelope") {
  Rng rng(4);
  const auto fam = family_f_params(255, 117, 1, 8, FamilyVariant::F, rng);
  const auto e = grs_envelope(fam);
  CHECK(e.inner_dim == 88);
  CHECK(e.outer_dim == 174);
  auto p = tower_params(15, 5, 1, 4, FamilyVariant::F, rng);
  p.hooks = {0};
  CHECK(grs_envelope(p).inner_dim == 0);
  p.twists = {10};
  CHECK(grs_envelope(p).outer_dim == 15);
  const auto rs = grs_envelope(rs_code(15, 5, 4));
  CHECK(rs.inner_dim == 5);
  CHECK(rs.outer_dim == 5);
}

TEST_CASE("separation bounds") {
  const auto s = separation_bounds(255, 117, 255);
  REQUIRE(s);
  CHECK(s->delta == 22);
  CHECK(s->outer_min_twice == 256);
  CHECK(s->outer_min == doctest::Approx(128.0));
  REQUIRE(s->inner_max);
  CHECK(*s->inner_max == doctest::Approx(std::sqrt(114.5 * 114.5 - 44.0) + 2.5).epsilon(1e-12));
  CHECK(*s->inner_max == doctest::Approx(116.8077).epsilon(1e-6));
  CHECK_FALSE(separation_bounds(255, 117, 233));
  const auto vac = separation_bounds(100, 3, 6);
  REQUIRE(vac);
  CHECK_FALSE(vac->inner_max);
  CHECK_THROWS_AS(separation_bounds(20, 10, 20), ContractError);
}

TEST_CASE("verdicts") {
  CHECK(classify_square(255, 117, 233) == Verdict::grs_like);
  CHECK(classify_square(255, 117, 255) == Verdict::random_like);
  CHECK(classify_square(255, 117, 240) == Verdict::intermediate);
  CHECK(classify_square(15, 10, 15) == Verdict::grs_like);  // both thresholds coincide
  CHECK(to_string(Verdict::random_like) == "random-like");
}

TEST_CASE("report on an RS code is GRS-like throughout") {
  const auto p = rs_code(31, 10, 5);
  ReportOptions opt;
  opt.single_positions = 5;
  opt.pair_samples = 4;
  const auto r = distinguisher_report(generator_matrix(p), &p, opt);
  CHECK(r.dim_square == 19);
  CHECK(r.square_verdict == Verdict::grs_like);
  CHECK(r.dual_square_verdict == Verdict::grs_like);
  CHECK(r.shortenings.size() == 9);
  for (const auto& s : r.shortenings) CHECK(s.verdict == Verdict::grs_like);
  CHECK_FALSE(r.separation);
  CHECK(r.bound_sumset == std::optional<std::size_t>(19));
  const auto text = serialize_report(r);
  CHECK(text.find("dim_square = 19\n") != std::string::npos);
  CHECK(text.find("square_verdict = GRS-like\n") != std::string::npos);
  CHECK(text.find("shortened[0] = 17\n") != std::string::npos);
  CHECK(format_report_text(r).find("GRS-like") != std::string::npos);
}

TEST_CASE("random codes are random-like") {
  auto f = FieldTower::make(8, 0);
  int random_like = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s);
    const auto g = random_code(f, 20, 100, rng);
    if (classify_square(100, 20, square_dimension(g)) == Verdict::random_like) ++random_like;
  }
  CHECK(random_like >= 99);
}

TEST_CASE("bound soundness on random tower codes") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 8 + rng.below(8), k = 2 + rng.below(n / 2 - 1);
    const auto p = tower_params(n, k, 1, 4, FamilyVariant::F, rng);
    const auto g = generator_matrix(p);
    const auto dim = square_dimension(g);
    CHECK(degree_bound_sumset(p) <= dim);
    CHECK(degree_bound_remainder(p) <= dim);
    CHECK(dim <= std::min(n, k * (k + 1) / 2));
    CHECK(dim >= std::min(2 * k - 1, n));
    std::vector<std::size_t> at{rng.below(n)};
    CHECK(shortened_square_dimension(g, at) <= n - 1);
  }
}
