#include <doctest.h>

#include "trs/error.hpp"
#include "trs/text_format.hpp"

using namespace trs;

TEST_CASE("parameter file round trip") {
  Rng rng(1);
  const auto p = family_f_params(255, 117, 1, 8, FamilyVariant::F, rng);
  const auto text = format_params_kv(p);
  CHECK(text.find("q0 = 256\n") != std::string::npos);
  CHECK(text.find("t = 57\n") != std::string::npos);
  CHECK(text.find("h = 88\n") != std::string::npos);
  CHECK(read_params_kv(text) == p);
  CHECK(read_params_kv("# comment\n" + text) == p);
}

TEST_CASE("parameter file errors") {
  Rng rng(2);
  const auto p = tower_params(15, 5, 1, 4, FamilyVariant::F, rng);
  const auto text = format_params_kv(p);
  auto replace = [&](const std::string& from, const std::string& to) {
    auto t = text;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  CHECK_THROWS_AS(read_params_kv(replace("q0 = 16", "q0 = 32")), FormatError);
  CHECK_THROWS_AS(read_params_kv(replace("n = 15", "n = 14")), FormatError);
  CHECK_THROWS_AS(read_params_kv(replace("ell = 1", "ell = 2")), FormatError);
  CHECK_THROWS_AS(read_params_kv(replace("field.modulus = ", "field.modulus = 0x0 #")), FormatError);
  CHECK_THROWS_AS(read_params_kv(replace("k = 5\n", "")), FormatError);
  CHECK_THROWS_AS(read_params_kv("garbage"), FormatError);
}

TEST_CASE("matrix text round trip") {
  Rng rng(3);
  const auto p = tower_params(15, 5, 1, 4, FamilyVariant::F, rng);
  const auto g = generator_matrix(p);
  const auto text = write_matrix_text(g);
  CHECK(text.rfind("trs-matrix 1\n", 0) == 0);
  const auto back = read_matrix_text(text);
  CHECK(back.same_entries(g));
  CHECK_THROWS_AS(read_matrix_text("trs-matrix 2\n"), FormatError);
  CHECK_THROWS_AS(read_matrix_text(text.substr(0, text.size() - 6)), FormatError);
  CHECK_THROWS_AS(read_matrix_text(text + " 0x1"), FormatError);
  CHECK_THROWS_AS(read_matrix_text("trs-matrix 1\nfield 4 1 0x2b\nsize 1 1\n0x100\n"), FormatError);
  CHECK_THROWS_AS(read_matrix_text("trs-matrix 1\nfield 4 1 0x0\nsize 1 1\n0x1\n"), FormatError);
}

TEST_CASE("shape report lists every check") {
  const auto s = family_shape(100, 10, 1, 8, FamilyVariant::F);
  const auto text = format_shape_kv(s);
  CHECK(text.find("check.2*sqrt(n) + 6 < k = FAILED") != std::string::npos);
  CHECK(text.find("valid = no") != std::string::npos);
}
