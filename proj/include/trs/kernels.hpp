#pragma once

// Data-parallel inner loops. Each kernel exists twice: a plain serial
// reference kept for cross-checking, and an OpenMP version used by the
// library. Both are exact (finite-field arithmetic), so tests require
// identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trs/gf_tower.hpp"
#include "trs/matrix.hpp"

namespace trs::kernels {

enum class Exec { serial, parallel };

// Sets the OpenMP thread count; 0 keeps the runtime default.
void set_threads(int threads);
int max_threads();
// Reads TRS_THREADS from the environment and applies it if set.
void apply_thread_env();

// Number of k-subsets of n, saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::size_t n, std::size_t k);

// k-subset of {0..n-1} with lexicographic index `index`.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index);
// Advances to the lexicographic successor; false after the last subset.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n);

// Determinant of the square submatrix of g on the given columns.
Elem minor_determinant(const CodeMatrix& g, std::span<const std::size_t> cols);

namespace serial {

// Textbook column-by-column Gaussian elimination.
std::size_t rank(const CodeMatrix& m);

// All products row_i * row_{i+d}, ordered by offset d and then i. Diagonal
// products come first: for systematic generators they are the only ones
// reaching the identity block, so an early-exit rank sees them early.
CodeMatrix schur_products(const CodeMatrix& g);

// True iff every maximal minor (rows x rows) is nonzero.
bool all_maximal_minors_nonzero(const CodeMatrix& g);

}  // namespace serial

namespace omp {

// Incremental echelon basis: rows are reduced against the current basis in
// parallel chunks, new pivots are appended serially, and the scan stops as
// soon as the rank reaches the column count.
std::size_t rank(const CodeMatrix& m);

CodeMatrix schur_products(const CodeMatrix& g);

// Column subsets are split across threads; any zero minor cancels the scan.
bool all_maximal_minors_nonzero(const CodeMatrix& g);

}  // namespace omp

inline std::size_t rank(const CodeMatrix& m, Exec exec) {
  return exec == Exec::serial ? serial::rank(m) : omp::rank(m);
}
inline CodeMatrix schur_products(const CodeMatrix& g, Exec exec) {
  return exec == Exec::serial ? serial::schur_products(g) : omp::schur_products(g);
}
inline bool all_maximal_minors_nonzero(const CodeMatrix& g, Exec exec) {
  return exec == Exec::serial ? serial::all_maximal_minors_nonzero(g)
                              : omp::all_maximal_minors_nonzero(g);
}

}  // namespace trs::kernels
