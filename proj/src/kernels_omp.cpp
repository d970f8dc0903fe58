#include <algorithm>
#include <atomic>

#include <omp.h>

#include "trs/kernels.hpp"

namespace trs::kernels::omp {

std::size_t rank(const CodeMatrix& m) {
  const FieldTower& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Basis rows are normalized (pivot entry 1) and zero at every earlier
  // pivot, so reducing a vector against them in insertion order is exact.
  std::vector<Elem> basis;
  std::vector<std::size_t> pivots;
  basis.reserve(std::min(rows, cols) * cols);

  const std::size_t chunk = std::max<std::size_t>(cols, 64);
  std::vector<Elem> work;
  for (std::size_t start = 0; start < rows && pivots.size() < cols; start += chunk) {
    const std::size_t count = std::min(chunk, rows - start);
    work.assign(m.entries().begin() + static_cast<std::ptrdiff_t>(start * cols),
                m.entries().begin() + static_cast<std::ptrdiff_t>((start + count) * cols));
    const std::size_t old_rank = pivots.size();

#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < count; ++r) {
      std::span<Elem> v(work.data() + r * cols, cols);
      for (std::size_t b = 0; b < old_rank; ++b) {
        const std::size_t p = pivots[b];
        const Elem x = v[p];
        if (x == 0) continue;
        f.axpy(x, std::span<const Elem>(basis.data() + b * cols + p, cols - p), v.subspan(p));
      }
    }

    for (std::size_t r = 0; r < count && pivots.size() < cols; ++r) {
      std::span<Elem> v(work.data() + r * cols, cols);
      for (std::size_t b = old_rank; b < pivots.size(); ++b) {
        const std::size_t p = pivots[b];
        const Elem x = v[p];
        if (x != 0)
          f.axpy(x, std::span<const Elem>(basis.data() + b * cols + p, cols - p), v.subspan(p));
      }
      std::size_t p = 0;
      while (p < cols && v[p] == 0) ++p;
      if (p == cols) continue;
      f.scale(f.inv(v[p]), v.subspan(p));
      basis.insert(basis.end(), v.begin(), v.end());
      pivots.push_back(p);
    }
  }
  return pivots.size();
}

CodeMatrix schur_products(const CodeMatrix& g) {
  const FieldTower& f = *g.field();
  const std::size_t k = g.rows(), n = g.cols();
  const std::size_t total = k * (k + 1) / 2;
  CodeMatrix out(g.field(), total, n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t d = 0; d < k; ++d) {
    // row offset of pair (0, d): sum_{e<d} (k - e)
    std::size_t idx = d * k - d * (d - 1) / 2;
    for (std::size_t i = 0; i + d < k; ++i, ++idx) {
      auto dst = out.row(idx);
      const auto a = g.row(i), b = g.row(i + d);
      for (std::size_t c = 0; c < n; ++c) dst[c] = f.mul(a[c], b[c]);
    }
  }
  return out;
}

bool all_maximal_minors_nonzero(const CodeMatrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  if (k > n) return false;
  if (k == 0) return true;
  const std::uint64_t total = binomial_saturating(n, k);
  std::atomic<bool> ok{true};
#pragma omp parallel
  {
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = total / threads * id + std::min(id, total % threads);
    const std::uint64_t len = total / threads + (id < total % threads ? 1 : 0);
    if (len > 0) {
      auto comb = unrank_combination(n, k, begin);
      for (std::uint64_t i = 0; i < len && ok.load(std::memory_order_relaxed); ++i) {
        if (minor_determinant(g, comb) == 0) ok.store(false, std::memory_order_relaxed);
        next_combination(comb, n);
      }
    }
  }
  return ok.load();
}

}  // namespace trs::kernels::omp
