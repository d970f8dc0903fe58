#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "trs/error.hpp"
#include "trs/gf_tower.hpp"

using namespace trs;

TEST_CASE("default moduli are the least irreducible polynomials") {
  for (unsigned m = 2; m <= 16; ++m) {
    const std::uint64_t low = default_modulus(m);
    CHECK(oracle::irreducible_by_trial(m, low));
    for (std::uint64_t smaller = 0; smaller < low; ++smaller)
      CHECK_FALSE(oracle::irreducible_by_trial(m, smaller));
  }
  for (unsigned m = 17; m <= 64; ++m) CHECK(is_irreducible(m, default_modulus(m)));
}

TEST_CASE("irreducibility test agrees with trial division") {
  for (unsigned m = 2; m <= 10; ++m)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << m); ++low)
      REQUIRE(is_irreducible(m, low) == oracle::irreducible_by_trial(m, low));
}

TEST_CASE("GF(8): x * x^2 = x + 1") {
  auto f = FieldTower::make(3, 0);
  CHECK(f->modulus() == 0x3);
  CHECK(f->mul(0b010, 0b100) == 0b011);
}

TEST_CASE("multiplication matches carry-less oracle") {
  Rng rng(11);
  for (auto [m0, lv] : {std::pair{2u, 0u}, {3u, 1u}, {4u, 1u}, {8u, 1u}, {5u, 2u}, {7u, 3u}, {16u, 2u}}) {
    auto f = FieldTower::make(m0, lv);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = f->random_element(rng), b = f->random_element(rng);
      REQUIRE(f->mul(a, b) == oracle::clmul_mod(f->degree(), f->modulus(), a, b));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  Rng rng(5);
  for (auto [m0, lv] : {std::pair{4u, 1u}, {8u, 1u}, {3u, 2u}, {11u, 1u}, {16u, 2u}}) {
    auto f = FieldTower::make(m0, lv);
    for (int i = 0; i < 10000; ++i) {
      const Elem a = f->random_element(rng), b = f->random_element(rng), c = f->random_element(rng);
      REQUIRE(f->mul(FieldTower::add(a, b), c) == FieldTower::add(f->mul(a, c), f->mul(b, c)));
      REQUIRE(FieldTower::add(a, a) == 0);
      if (a != 0) {
        REQUIRE(f->mul(a, f->inv(a)) == 1);
        REQUIRE(f->div(f->mul(a, b), a) == b);
      }
    }
  }
}

TEST_CASE("pow(g, q-1) = 1 and division by zero") {
  Rng rng(3);
  auto f = FieldTower::make(4, 1);
  for (int i = 0; i < 200; ++i) CHECK(f->pow(f->random_nonzero(rng), 255) == 1);
  CHECK_THROWS_AS(f->inv(0), DivisionByZero);
  CHECK_THROWS_AS(f->div(1, 0), DivisionByZero);
  CHECK(f->pow(0, 0) == 1);
}

TEST_CASE("subfield membership counts") {
  // GF(8) inside GF(64), exhaustively
  auto f = FieldTower::make(3, 1);
  std::size_t in0 = 0, in1 = 0;
  for (Elem x : f->elements()) {
    in0 += f->is_in_subfield(x, 0);
    in1 += f->is_in_subfield(x, 1);
  }
  CHECK(in0 == 8);
  CHECK(in1 == 64);
  // GF(2) < GF(4) < GF(16) < GF(256)
  auto g = FieldTower::make(1, 3);
  std::vector<std::size_t> counts(4, 0);
  for (Elem x : g->elements())
    for (unsigned lv = 0; lv <= 3; ++lv) counts[lv] += g->is_in_subfield(x, lv);
  CHECK(counts == std::vector<std::size_t>{2, 4, 16, 256});
  CHECK_THROWS_AS(g->is_in_subfield(1, 4), ContractError);
}

TEST_CASE("0 and 1 lie in every subfield; a generator of GF(64) does not lie in GF(8)") {
  auto f = FieldTower::make(3, 1);
  CHECK(f->is_in_subfield(0, 0));
  CHECK(f->is_in_subfield(1, 0));
  for (Elem x = 2; x < 64; ++x)
    if (f->order(x) == 63) CHECK_FALSE(f->is_in_subfield(x, 0));
}

TEST_CASE("norm map lands in the subfield") {
  auto f = FieldTower::make(3, 1);
  for (Elem x = 1; x < 64; ++x) {
    CHECK(f->is_in_subfield(f->to_subfield(x, 0), 0));
    CHECK(f->to_subfield(x, 0) != 0);
  }
}

TEST_CASE("sample_eta lies in the right subfield difference and is reproducible") {
  auto f = FieldTower::make(2, 3);
  for (unsigned lv = 1; lv <= 3; ++lv) {
    Rng a(99), b(99);
    for (int i = 0; i < 200; ++i) {
      const Elem e = f->sample_eta(lv, a);
      CHECK(f->is_in_subfield(e, lv));
      CHECK_FALSE(f->is_in_subfield(e, lv - 1));
      CHECK(e == f->sample_eta(lv, b));
    }
  }
  Rng rng(1);
  CHECK_THROWS_AS(f->sample_eta(0, rng), ContractError);
  CHECK_THROWS_AS(f->sample_eta(4, rng), ContractError);
}

TEST_CASE("random_element_of_order") {
  auto f = FieldTower::make(4, 1);
  Rng rng(2);
  for (std::uint64_t n : {3u, 5u, 15u}) {
    const Elem g = f->random_element_of_order(n, 0, rng);
    CHECK(f->order(g) == n);
    CHECK(f->is_in_subfield(g, 0));
  }
  CHECK_THROWS_AS(f->random_element_of_order(7, 0, rng), ContractError);
}

TEST_CASE("enumeration streams every element once in bit-pattern order") {
  auto f4 = FieldTower::make(2, 0);
  std::vector<Elem> all(f4->elements().begin(), f4->elements().end());
  CHECK(all == std::vector<Elem>{0, 1, 2, 3});
  auto f = FieldTower::make(8, 0);
  std::set<Elem> seen;
  Elem prev = 0;
  bool first = true;
  for (Elem x : f->elements()) {
    CHECK((first || x > prev));
    first = false;
    prev = x;
    seen.insert(x);
  }
  CHECK(seen.size() == 256);
  CHECK(*std::next(f->elements().begin()) == 1);
}

TEST_CASE("element serialization") {
  auto f = FieldTower::make(5, 2);  // m = 20, 3 bytes
  CHECK(f->byte_width() == 3);
  std::vector<std::uint8_t> out;
  f->write_element(0xABCDE, out);
  CHECK(out == std::vector<std::uint8_t>{0xDE, 0xBC, 0x0A});
  CHECK(f->read_element(out) == 0xABCDE);
  out[2] = 0xFF;
  CHECK_THROWS_AS(f->read_element(out), FormatError);
  CHECK_THROWS_AS(f->read_element(std::span<const std::uint8_t>(out).first(2)), FormatError);
}

TEST_CASE("large fields use shift-and-add multiplication consistently") {
  auto f = FieldTower::make(8, 3);  // GF(2^64)
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Elem a = f->random_nonzero(rng);
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->mul(a, a) == oracle::clmul_mod(64, f->modulus(), a, a));
  }
  const Elem e = f->sample_eta(3, rng);
  CHECK(f->is_in_subfield(e, 3));
  CHECK_FALSE(f->is_in_subfield(e, 2));
}

TEST_CASE("FieldElement refuses to mix fields") {
  auto a = FieldTower::make(4, 1);
  auto b = FieldTower::make(8, 0, 0x2b);  // same degree, different modulus
  FieldElement x(a, 3), y(b, 3), z(FieldTower::make(4, 1), 5);
  CHECK_THROWS_AS(x + y, FieldMismatch);
  CHECK_THROWS_AS(x * y, FieldMismatch);
  CHECK((x + z).value() == 6);  // equal descriptors are the same field
  CHECK((x * x.inv()).value() == 1);
  CHECK_THROWS_AS(FieldElement(a, 0).inv(), DivisionByZero);
  CHECK_THROWS_AS(FieldElement(a, 256), ContractError);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FieldTower::make(8, 4), ContractError);
  CHECK_THROWS_AS(FieldTower::make(1, 0), ContractError);
  CHECK_THROWS_AS(FieldTower::make(8, 0, 0x0), ContractError);  // X^8 is reducible
}
