#include <cstdlib>
#include <limits>
#include <string>

#include <omp.h>

#include "trs/error.hpp"
#include "trs/kernels.hpp"

namespace trs::kernels {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

void apply_thread_env() {
  if (const char* env = std::getenv("TRS_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) set_threads(t);
  }
}

std::uint64_t binomial_saturating(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index) {
  std::vector<std::size_t> comb;
  comb.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t c = next; c < n; ++c) {
      // subsets whose slot-th element is c
      const std::uint64_t count = binomial_saturating(n - c - 1, k - slot - 1);
      if (index < count) {
        comb.push_back(c);
        next = c + 1;
        break;
      }
      index -= count;
    }
  }
  if (comb.size() != k) throw ContractError("combination index out of range");
  return comb;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Elem minor_determinant(const CodeMatrix& g, std::span<const std::size_t> cols) {
  const FieldTower& f = *g.field();
  const std::size_t k = g.rows();
  if (cols.size() != k) throw ContractError("minor must be square");
  std::vector<Elem> a(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a[r * k + c] = g.at(r, cols[c]);
  Elem det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p * k + c] == 0) ++p;
    if (p == k) return 0;
    if (p != c)
      for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
    const Elem piv = a[c * k + c];
    det = f.mul(det, piv);
    const Elem piv_inv = f.inv(piv);
    std::span<const Elem> prow(a.data() + c * k + c, k - c);
    for (std::size_t r = c + 1; r < k; ++r) {
      const Elem x = a[r * k + c];
      if (x != 0) f.axpy(f.mul(x, piv_inv), prow, std::span<Elem>(a.data() + r * k + c, k - c));
    }
  }
  return det;
}

namespace serial {

std::size_t rank(const CodeMatrix& m) {
  const FieldTower& f = *m.field();
  CodeMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    const Elem piv_inv = f.inv(a.at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Elem x = a.at(i, c);
      if (x != 0) f.axpy(f.mul(x, piv_inv), a.row(r), a.row(i));
    }
    ++r;
  }
  return r;
}

CodeMatrix schur_products(const CodeMatrix& g) {
  const FieldTower& f = *g.field();
  const std::size_t k = g.rows(), n = g.cols();
  CodeMatrix out(g.field(), k * (k + 1) / 2, n);
  std::size_t idx = 0;
  for (std::size_t d = 0; d < k; ++d)
    for (std::size_t i = 0; i + d < k; ++i, ++idx)
      for (std::size_t c = 0; c < n; ++c) out.at(idx, c) = f.mul(g.at(i, c), g.at(i + d, c));
  return out;
}

bool all_maximal_minors_nonzero(const CodeMatrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  do {
    if (minor_determinant(g, comb) == 0) return false;
  } while (next_combination(comb, n));
  return true;
}

}  // namespace serial
}  // namespace trs::kernels
