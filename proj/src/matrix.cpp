#include "trs/matrix.hpp"

#include <algorithm>

#include "trs/error.hpp"
#include "trs/kernels.hpp"

namespace trs {

std::string_view to_string(MatrixRole role) {
  switch (role) {
    case MatrixRole::generator:
      return "generator";
    case MatrixRole::systematic_generator:
      return "systematic_generator";
    case MatrixRole::parity_check:
      return "parity_check";
    case MatrixRole::plain:
      break;
  }
  return "plain";
}

CodeMatrix::CodeMatrix(FieldPtr field, std::size_t rows, std::size_t cols, MatrixRole role)
    : field_(std::move(field)), rows_(rows), cols_(cols), role_(role), data_(rows * cols, 0) {
  if (!field_) throw ContractError("CodeMatrix without a field");
}

CodeMatrix::CodeMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                       std::vector<Elem> entries, MatrixRole role)
    : field_(std::move(field)), rows_(rows), cols_(cols), role_(role), data_(std::move(entries)) {
  if (!field_) throw ContractError("CodeMatrix without a field");
  if (data_.size() != rows * cols) throw ContractError("CodeMatrix: entry count mismatch");
  for (auto e : data_)
    if (!field_->contains(e)) throw ContractError("CodeMatrix: entry exceeds field degree");
}

CodeMatrix CodeMatrix::identity(FieldPtr field, std::size_t n) {
  CodeMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

CodeMatrix CodeMatrix::transpose() const {
  CodeMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

CodeMatrix CodeMatrix::columns(std::span<const std::size_t> indices) const {
  CodeMatrix out(field_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (indices[j] >= cols_) throw ContractError("column index out of range");
      out.at(r, j) = at(r, indices[j]);
    }
  return out;
}

CodeMatrix CodeMatrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ContractError("column range out of bounds");
  CodeMatrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < count; ++j) out.at(r, j) = at(r, first + j);
  return out;
}

CodeMatrix CodeMatrix::operator*(const CodeMatrix& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch();
  if (cols_ != o.rows_) throw ContractError("matrix product dimension mismatch");
  CodeMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < cols_; ++i) field_->axpy(at(r, i), o.row(i), out.row(r));
  return out;
}

CodeMatrix CodeMatrix::scale_columns(std::span<const Elem> factors) const {
  if (factors.size() != cols_) throw ContractError("scale_columns: factor count mismatch");
  CodeMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = field_->mul(at(r, c), factors[c]);
  return out;
}

bool CodeMatrix::is_zero() const {
  for (auto e : data_)
    if (e != 0) return false;
  return true;
}

bool CodeMatrix::same_entries(const CodeMatrix& o) const {
  return field_->same_as(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Elem> vec_mat(std::span<const Elem> x, const CodeMatrix& m) {
  if (x.size() != m.rows()) throw ContractError("vector length does not match matrix rows");
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) m.field()->axpy(x[i], m.row(i), out);
  return out;
}

std::size_t rank(const CodeMatrix& m) { return kernels::omp::rank(m); }

std::vector<std::size_t> rref(CodeMatrix& a) {
  const FieldTower& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    f.scale(f.inv(a.at(r, c)), a.row(r));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem x = a.at(i, c);
      if (x != 0) f.axpy(x, a.row(r), a.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

CodeMatrix right_nullspace(const CodeMatrix& m) {
  CodeMatrix a = m;
  const auto pivots = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  CodeMatrix out(m.field(), cols - pivots.size(), cols);
  std::size_t row = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(row, free) = 1;
    // x_pivot = -a[r][free] (characteristic 2: minus is plus)
    for (std::size_t r = 0; r < pivots.size(); ++r) out.at(row, pivots[r]) = a.at(r, free);
    ++row;
  }
  return out;
}

CodeMatrix left_nullspace(const CodeMatrix& m) { return right_nullspace(m.transpose()); }

std::optional<CodeMatrix> inverse(const CodeMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ContractError("inverse of a non-square matrix");
  CodeMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.column_range(n, n);
}

bool row_space_contains(const CodeMatrix& b, const CodeMatrix& a) {
  if (a.cols() != b.cols()) return false;
  CodeMatrix stacked(b.field(), a.rows() + b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row(r).begin(), b.row(r).end(), stacked.row(r).begin());
  for (std::size_t r = 0; r < a.rows(); ++r)
    std::copy(a.row(r).begin(), a.row(r).end(), stacked.row(b.rows() + r).begin());
  return rank(stacked) == rank(b);
}

bool same_row_space(const CodeMatrix& a, const CodeMatrix& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

std::size_t hamming_weight(std::span<const Elem> v) {
  std::size_t w = 0;
  for (auto e : v) w += e != 0;
  return w;
}

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw ContractError("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace trs
