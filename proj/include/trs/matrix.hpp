#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trs/gf_tower.hpp"

namespace trs {

enum class MatrixRole { plain, generator, systematic_generator, parity_check };

std::string_view to_string(MatrixRole role);

// Dense row-major matrix over a FieldTower with a role tag.
class CodeMatrix {
 public:
  CodeMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
             MatrixRole role = MatrixRole::plain);
  CodeMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries,
             MatrixRole role = MatrixRole::plain);

  static CodeMatrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MatrixRole role() const { return role_; }
  void set_role(MatrixRole role) { role_ = role; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const { return data_; }

  CodeMatrix transpose() const;
  CodeMatrix columns(std::span<const std::size_t> indices) const;
  CodeMatrix column_range(std::size_t first, std::size_t count) const;
  CodeMatrix operator*(const CodeMatrix& o) const;
  // Scales column j by factors[j].
  CodeMatrix scale_columns(std::span<const Elem> factors) const;

  bool is_zero() const;
  // Element-wise equality including field, ignoring the role tag.
  bool same_entries(const CodeMatrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  MatrixRole role_;
  std::vector<Elem> data_;
};

// x * M for a row vector x.
std::vector<Elem> vec_mat(std::span<const Elem> x, const CodeMatrix& m);

std::size_t rank(const CodeMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(CodeMatrix& m);

// Basis (as rows) of { x : M x^T = 0 }.
CodeMatrix right_nullspace(const CodeMatrix& m);

// Basis (as rows) of { y : y M = 0 }.
CodeMatrix left_nullspace(const CodeMatrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<CodeMatrix> inverse(const CodeMatrix& m);

// True iff every row of a lies in the row space of b.
bool row_space_contains(const CodeMatrix& b, const CodeMatrix& a);
bool same_row_space(const CodeMatrix& a, const CodeMatrix& b);

std::size_t hamming_weight(std::span<const Elem> v);
std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

}  // namespace trs
