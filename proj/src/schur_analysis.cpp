#include "trs/schur_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "trs/error.hpp"
#include "trs/polynomial.hpp"
#include "trs/random.hpp"

namespace trs {

std::vector<Elem> schur_product(const FieldTower& field, std::span<const Elem> x,
                                std::span<const Elem> y) {
  if (x.size() != y.size()) throw ContractError("schur_product: length mismatch");
  std::vector<Elem> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field.mul(x[i], y[i]);
  return out;
}

std::size_t square_dimension(const CodeMatrix& g, kernels::Exec exec) {
  if (kernels::rank(g, exec) != g.rows())
    throw ContractError("square_dimension: generator matrix is rank deficient");
  return kernels::rank(kernels::schur_products(g, exec), exec);
}

CodeMatrix shorten(const CodeMatrix& g, std::span<const std::size_t> positions) {
  const FieldTower& f = *g.field();
  std::vector<bool> drop(g.cols(), false);
  for (auto p : positions) {
    if (p >= g.cols()) throw ContractError("shorten: position out of range");
    if (drop[p]) throw ContractError("shorten: repeated position");
    drop[p] = true;
  }
  CodeMatrix a = g;
  std::vector<bool> removed(g.rows(), false);
  for (auto p : positions) {
    std::size_t piv = 0;
    while (piv < a.rows() && (removed[piv] || a.at(piv, p) == 0)) ++piv;
    if (piv == a.rows()) continue;
    const Elem inv = f.inv(a.at(piv, p));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == piv || removed[r] || a.at(r, p) == 0) continue;
      f.axpy(f.mul(a.at(r, p), inv), a.row(piv), a.row(r));
    }
    removed[piv] = true;
  }
  std::vector<std::size_t> keep_cols;
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (!drop[c]) keep_cols.push_back(c);
  const std::size_t dim = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), false));
  if (dim == 0) throw ContractError("shorten: shortened code is empty");
  CodeMatrix out(g.field(), dim, keep_cols.size(), g.role());
  std::size_t row = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (removed[r]) continue;
    for (std::size_t j = 0; j < keep_cols.size(); ++j) out.at(row, j) = a.at(r, keep_cols[j]);
    ++row;
  }
  return out;
}

std::size_t shortened_square_dimension(const CodeMatrix& g, std::span<const std::size_t> positions,
                                       kernels::Exec exec) {
  if (positions.size() > 2) throw ContractError("shortened_square_dimension: at most two positions");
  if (positions.empty()) return square_dimension(g, exec);
  return square_dimension(shorten(g, positions), exec);
}

namespace {

std::vector<std::size_t> basis_degrees(const TwistedCodeParams& p) {
  std::set<std::size_t> s;
  for (std::size_t j = 0; j < p.k; ++j) s.insert(j);
  for (auto h : p.hooks) s.erase(h);
  for (auto t : p.twists) s.insert(t + p.k - 1);
  return {s.begin(), s.end()};
}

std::vector<Poly> basis_polys(const TwistedCodeParams& p) {
  std::vector<Poly> out;
  out.reserve(p.k);
  for (std::size_t j = 0; j < p.k; ++j) out.push_back(Poly::monomial(p.field, j));
  for (std::size_t mu = 0; mu < p.ell(); ++mu)
    out[p.hooks[mu]].add_to_coeff(p.k - 1 + p.twists[mu], p.eta[mu]);
  return out;
}

}  // namespace

std::size_t degree_bound_sumset(const TwistedCodeParams& p) {
  const auto s = basis_degrees(p);
  std::vector<bool> hit(p.n, false);
  for (auto a : s)
    for (auto b : s)
      if (a + b < p.n) hit[a + b] = true;
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

std::size_t degree_bound_remainder(const TwistedCodeParams& p) {
  if (auto v = validate_params(p); !v.empty()) throw ContractError("invalid code parameters: " + v.front());
  const Poly m = Poly::from_roots(p.field, p.alpha);
  const auto basis = basis_polys(p);
  std::vector<bool> hit(p.n, false);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Poly r = poly_mul_mod(basis[i], basis[j], m);
      if (!r.is_zero()) hit[r.degree().value()] = true;
    }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

GrsEnvelope grs_envelope(const TwistedCodeParams& p) {
  if (p.ell() == 0) return {p.k, p.k};
  const std::size_t hmin = *std::min_element(p.hooks.begin(), p.hooks.end());
  const std::size_t tmax = *std::max_element(p.twists.begin(), p.twists.end());
  return {hmin, std::min(p.n, p.k + tmax)};
}

std::optional<SeparationBounds> separation_bounds(std::size_t n, std::size_t k, std::size_t dim_sq) {
  if (2 * k >= n) throw ContractError("separation_bounds: requires k < n/2");
  const long long delta = static_cast<long long>(dim_sq) - (2 * static_cast<long long>(k) - 1);
  if (delta <= 0) return std::nullopt;
  SeparationBounds s;
  s.delta = delta;
  s.outer_min_twice = 2 * static_cast<long long>(k) + delta;
  s.outer_min = static_cast<double>(s.outer_min_twice) / 2.0;
  // (k - 5/2)^2 - 2 delta = ((2k - 5)^2 - 8 delta) / 4, exact in integers
  const long long twice = 2 * static_cast<long long>(k) - 5;
  const long long radicand4 = twice * twice - 8 * delta;
  if (radicand4 >= 0)
    s.inner_max = static_cast<double>(std::sqrt(static_cast<long double>(radicand4)) / 2.0L + 2.5L);
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::grs_like:
      return "GRS-like";
    case Verdict::random_like:
      return "random-like";
    case Verdict::intermediate:
      break;
  }
  return "intermediate";
}

Verdict classify_square(std::size_t n, std::size_t k, std::size_t dim_sq) {
  if (dim_sq == std::min(2 * k - 1, n)) return Verdict::grs_like;
  if (dim_sq == std::min(k * (k + 1) / 2, n)) return Verdict::random_like;
  return Verdict::intermediate;
}

AnalysisReport distinguisher_report(const CodeMatrix& g, const TwistedCodeParams* params,
                                    const ReportOptions& options) {
  AnalysisReport r;
  r.n = g.cols();
  r.k = g.rows();
  r.dim_square = square_dimension(g, options.exec);
  r.square_verdict = classify_square(r.n, r.k, r.dim_square);

  const CodeMatrix h = right_nullspace(g);
  if (h.rows() > 0) {
    r.dim_dual_square = square_dimension(h, options.exec);
    r.dual_square_verdict = classify_square(r.n, h.rows(), r.dim_dual_square);
  }

  auto add_shortening = [&](std::vector<std::size_t> pos) {
    const CodeMatrix s = shorten(g, pos);
    const std::size_t dim = square_dimension(s, options.exec);
    r.shortenings.push_back({std::move(pos), s.cols(), s.rows(), dim,
                             classify_square(s.cols(), s.rows(), dim)});
  };
  if (r.k > 1) {
    const std::size_t singles = std::min(options.single_positions, r.n);
    for (std::size_t i = 0; i < singles; ++i) add_shortening({i});
  }
  if (r.k > 2 && r.n >= 2 && options.pair_samples > 0) {
    Rng rng(options.pair_seed);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const std::size_t max_pairs = r.n * (r.n - 1) / 2;
    while (seen.size() < std::min(options.pair_samples, max_pairs)) {
      std::size_t a = rng.below(r.n), b = rng.below(r.n);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (seen.insert({a, b}).second) add_shortening({a, b});
    }
  }

  if (2 * r.k < r.n) r.separation = separation_bounds(r.n, r.k, r.dim_square);

  if (params != nullptr) {
    r.bound_sumset = degree_bound_sumset(*params);
    r.bound_remainder = degree_bound_remainder(*params);
    r.envelope = grs_envelope(*params);
  }
  return r;
}

namespace {

std::string positions_key(const std::vector<std::size_t>& pos) {
  std::string s = "shortened[";
  for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? "," : "") + std::to_string(pos[i]);
  return s + "]";
}

std::string real(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

std::string serialize_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << "\n";
  os << "k = " << r.k << "\n";
  os << "dim_square = " << r.dim_square << "\n";
  os << "square_verdict = " << to_string(r.square_verdict) << "\n";
  os << "dim_dual_square = " << r.dim_dual_square << "\n";
  os << "dual_square_verdict = " << to_string(r.dual_square_verdict) << "\n";
  os << "square_upper_bound = " << std::min(r.n, r.k * (r.k + 1) / 2) << "\n";
  if (r.bound_sumset) os << "bound_sumset = " << *r.bound_sumset << "\n";
  if (r.bound_remainder) os << "bound_remainder = " << *r.bound_remainder << "\n";
  if (r.envelope) {
    os << "grs_envelope.inner_dim = " << r.envelope->inner_dim << "\n";
    os << "grs_envelope.outer_dim = " << r.envelope->outer_dim << "\n";
  }
  if (r.separation) {
    os << "separation.delta = " << r.separation->delta << "\n";
    os << "separation.outer_min = " << real(r.separation->outer_min) << "\n";
    os << "separation.inner_max = "
       << (r.separation->inner_max ? real(*r.separation->inner_max) : std::string("none")) << "\n";
  } else {
    os << "separation = not-applicable\n";
  }
  for (const auto& s : r.shortenings) {
    const std::string key = positions_key(s.positions);
    os << key << " = " << s.square_dim << "\n";
    os << key << ".length = " << s.length << "\n";
    os << key << ".verdict = " << to_string(s.verdict) << "\n";
  }
  return os.str();
}

std::string format_report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "Schur-square structural report for an [" << r.n << ", " << r.k << "] code\n";
  os << "  dim C^2            " << std::setw(6) << r.dim_square << "   "
     << to_string(r.square_verdict) << "\n";
  os << "  dim (C^perp)^2     " << std::setw(6) << r.dim_dual_square << "   "
     << to_string(r.dual_square_verdict) << "\n";
  os << "  GRS value 2k-1     " << std::setw(6) << std::min(2 * r.k - 1, r.n) << "\n";
  os << "  random value       " << std::setw(6) << std::min(r.k * (r.k + 1) / 2, r.n) << "\n";
  if (r.bound_sumset) os << "  degree-set bound   " << std::setw(6) << *r.bound_sumset << "\n";
  if (r.bound_remainder) os << "  remainder bound    " << std::setw(6) << *r.bound_remainder << "\n";
  if (r.envelope)
    os << "  RS envelope        " << r.envelope->inner_dim << " <= dim C <= " << r.envelope->outer_dim
       << "\n";
  if (r.separation) {
    os << "  GRS supercode dim >= " << real(r.separation->outer_min) << "\n";
    os << "  GRS subcode dim   <= "
       << (r.separation->inner_max ? real(*r.separation->inner_max) : std::string("(vacuous)")) << "\n";
  }
  if (!r.shortenings.empty()) {
    os << "  shortenings:\n";
    os << "    positions      length  dim  square  verdict\n";
    for (const auto& s : r.shortenings) {
      std::string pos;
      for (std::size_t i = 0; i < s.positions.size(); ++i)
        pos += (i ? "," : "") + std::to_string(s.positions[i]);
      os << "    " << std::left << std::setw(14) << pos << std::right << std::setw(6) << s.length
         << std::setw(5) << s.dimension << std::setw(8) << s.square_dim << "  " << to_string(s.verdict)
         << "\n";
    }
  }
  return os.str();
}

}  // namespace trs
