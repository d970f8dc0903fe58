#pragma once

#include <string>
#include <string_view>

#include "trs/matrix.hpp"
#include "trs/twisted_code.hpp"

namespace trs {

// Plain-text forms shared by the CLI and tests. Scalars are written as
// 0x-prefixed hex bit patterns.

std::string hex_elem(Elem a);

// Parameter file, "key = value" lines: q0, field.m, field.m0, field.levels,
// field.modulus, n, k, ell, t, h, eta, alpha. read_params_kv accepts any
// key order, ignores '#' lines and validates the result.
std::string format_params_kv(const TwistedCodeParams& p);
TwistedCodeParams read_params_kv(std::string_view text);

// "key = value" lines: r, t, h, q and one line per inequality check.
std::string format_shape_kv(const FamilyShape& s);

// Matrix text file:
//   trs-matrix 1
//   field <m0> <levels> <modulus hex>
//   size <rows> <cols>
//   <rows lines of cols hex entries>
// Lines starting with '#' are ignored.
std::string write_matrix_text(const CodeMatrix& m);
CodeMatrix read_matrix_text(std::string_view text);

}  // namespace trs
