#include "trs/twisted_code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "trs/error.hpp"
#include "trs/polynomial.hpp"

namespace trs {

namespace {

std::string fmt_real(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Uniform random `count`-subset of [lo, hi] in random order.
std::vector<std::size_t> random_distinct(std::size_t count, std::size_t lo, std::size_t hi,
                                         Rng& rng) {
  std::vector<std::size_t> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

std::vector<Elem> sample_alpha(const FieldTower& f, std::size_t n, FamilyVariant variant,
                               Rng& rng) {
  std::vector<Elem> alpha;
  alpha.reserve(n);
  if (variant == FamilyVariant::F_tilde) {
    const Elem gen = f.random_element_of_order(n, 0, rng);
    const std::uint64_t shift = rng.below(n);
    Elem x = f.pow(gen, shift);
    for (std::size_t i = 0; i < n; ++i) {
      alpha.push_back(x);
      x = f.mul(x, gen);
    }
    return alpha;
  }
  std::unordered_set<Elem> seen;
  while (alpha.size() < n) {
    const Elem a = f.random_subfield_nonzero(0, rng);
    if (seen.insert(a).second) alpha.push_back(a);
  }
  return alpha;
}

std::uint64_t subfield_group_order(unsigned degree) {
  return degree >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
}

}  // namespace

bool TwistedCodeParams::operator==(const TwistedCodeParams& o) const {
  return field && o.field && field->same_as(*o.field) && n == o.n && k == o.k &&
         twists == o.twists && hooks == o.hooks && eta == o.eta && alpha == o.alpha;
}

TwistedCodeParams rs_params(FieldPtr field, std::vector<Elem> alpha, std::size_t k) {
  TwistedCodeParams p;
  p.field = std::move(field);
  p.n = alpha.size();
  p.k = k;
  p.alpha = std::move(alpha);
  return p;
}

std::vector<std::string> validate_params(const TwistedCodeParams& p) {
  std::vector<std::string> v;
  if (!p.field) {
    v.emplace_back("missing field");
    return v;
  }
  const FieldTower& f = *p.field;
  if (p.k == 0) v.emplace_back("dimension k must be positive");
  if (p.k >= p.n) v.emplace_back("dimension k must be smaller than length n");
  if (p.alpha.size() != p.n) v.emplace_back("alpha must have n entries");
  if (!std::all_of(p.alpha.begin(), p.alpha.end(), [&](Elem a) { return f.contains(a); }))
    v.emplace_back("alpha entry outside the field");
  if (!has_distinct_entries(p.alpha)) v.emplace_back("evaluation points not distinct");
  const std::size_t ell = p.twists.size();
  if (p.hooks.size() != ell || p.eta.size() != ell) {
    v.emplace_back("twist, hook and coefficient counts differ");
    return v;
  }
  for (auto t : p.twists)
    if (t < 1 || t + p.k > p.n) {
      v.emplace_back("twist out of range: need 1 <= t_i <= n-k");
      break;
    }
  for (auto h : p.hooks)
    if (h >= p.k) {
      v.emplace_back("hook out of range: need 0 <= h_i < k");
      break;
    }
  auto distinct = [](std::vector<std::size_t> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!distinct(p.twists)) v.emplace_back("twists not distinct");
  if (!distinct(p.hooks)) v.emplace_back("hooks not distinct");
  for (auto e : p.eta)
    if (e == 0 || !f.contains(e)) {
      v.emplace_back("twist coefficient eta_i must be a nonzero field element");
      break;
    }
  if (ell > 0) {
    const std::size_t tmax = *std::max_element(p.twists.begin(), p.twists.end());
    if (p.k - 1 + tmax >= p.n) v.emplace_back("k-1+max(t) must be < n for an injective evaluation");
  }
  return v;
}

bool FamilyShape::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
}

FamilyShape family_shape(std::size_t n, std::size_t k, std::size_t ell, unsigned base_degree,
                         FamilyVariant variant) {
  FamilyShape s;
  s.n = n;
  s.k = k;
  s.ell = ell;
  s.base_degree = base_degree;
  using I = long long;
  const I N = static_cast<I>(n), K = static_cast<I>(k), L = static_cast<I>(ell);
  const double sqn = std::sqrt(static_cast<double>(n));
  auto add = [&](std::string name, bool ok, std::string detail) {
    s.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const bool degree_ok = base_degree >= 1 && ell <= 6 && (std::uint64_t{base_degree} << ell) <= 64 &&
                         (std::uint64_t{base_degree} << ell) >= 2;
  add("q = q0^(2^l) has degree <= 64", degree_ok,
      "m0 * 2^l = " + std::to_string(std::uint64_t{base_degree} << std::min<std::size_t>(ell, 6)));
  const std::uint64_t q0m1 = base_degree >= 1 && base_degree <= 64 ? subfield_group_order(base_degree) : 0;
  add("n <= q0 - 1", n <= q0m1, "n = " + std::to_string(n) + ", q0 - 1 = " + std::to_string(q0m1));
  add("k < n", k < n, "");
  // 2 sqrt(n) + 6 < k  <=>  k > 6 and (k-6)^2 > 4n
  add("2*sqrt(n) + 6 < k", K > 6 && (K - 6) * (K - 6) > 4 * N,
      fmt_real(2 * sqn + 6) + " < " + std::to_string(k));
  add("k <= n/2 - 2", 2 * K + 4 <= N,
      std::to_string(k) + " <= " + fmt_real(N / 2.0 - 2));
  // (n+1)/(k - sqrt n) - 2 < l  <=>  A := (l+2)k - (n+1) > 0 and A^2 > (l+2)^2 n
  {
    const I a = (L + 2) * K - (N + 1);
    const bool ok = K * K > N && a > 0 && a * a > (L + 2) * (L + 2) * N;
    const double lower = K > sqn ? (N + 1) / (K - sqn) - 2 : INFINITY;
    add("(n+1)/(k-sqrt(n)) - 2 < l", ok, fmt_real(lower) + " < " + std::to_string(ell));
  }
  add("l < k + 1", L < K + 1, std::to_string(ell) + " < " + std::to_string(k + 1));
  add("l < 2n/k - 2", K > 0 && (L + 2) * K < 2 * N,
      std::to_string(ell) + " < " + fmt_real(K > 0 ? 2.0 * N / K - 2 : 0));
  add("l < sqrt(n) - 4", (L + 4) * (L + 4) < N, std::to_string(ell) + " < " + fmt_real(sqn - 4));
  if (variant == FamilyVariant::F_tilde)
    add("n | q0 - 1", n > 0 && q0m1 % n == 0, std::to_string(q0m1) + " mod " + std::to_string(n));

  s.r = (n + 1 + ell + 1) / (ell + 2) + 2;
  bool shape_ok = true;
  for (std::size_t i = 1; i <= ell; ++i) {
    const I t = static_cast<I>(i + 1) * (static_cast<I>(s.r) - 2) - K + 2;
    const std::size_t h = s.r - 1 + i;
    if (t < 1 || t > N - K || h >= k) shape_ok = false;
    s.twists.push_back(t < 0 ? 0 : static_cast<std::size_t>(t));
    s.hooks.push_back(h);
  }
  add("derived t, h satisfy 1 <= t_i <= n-k and h_i < k", shape_ok, "");
  s.field_degree = degree_ok ? static_cast<unsigned>(std::uint64_t{base_degree} << ell) : 0;
  return s;
}

TwistedCodeParams family_f_params(std::size_t n, std::size_t k, std::size_t ell,
                                  unsigned base_degree, FamilyVariant variant, Rng& rng) {
  const FamilyShape shape = family_shape(n, k, ell, base_degree, variant);
  for (const auto& c : shape.checks)
    if (!c.satisfied)
      throw ParameterRejected("parameter rejected: " + c.name +
                              (c.detail.empty() ? "" : " (" + c.detail + ")"));
  TwistedCodeParams p;
  p.field = FieldTower::make(base_degree, static_cast<unsigned>(ell));
  p.n = n;
  p.k = k;
  p.twists = shape.twists;
  p.hooks = shape.hooks;
  for (std::size_t i = 1; i <= ell; ++i) p.eta.push_back(p.field->sample_eta(static_cast<unsigned>(i), rng));
  p.alpha = sample_alpha(*p.field, n, variant, rng);
  if (auto v = validate_params(p); !v.empty()) throw IntegrityError("family construction invalid: " + v.front());
  return p;
}

TwistedCodeParams tower_params(std::size_t n, std::size_t k, std::size_t ell,
                               unsigned base_degree, FamilyVariant variant, Rng& rng) {
  if (k == 0 || k >= n) throw ParameterRejected("parameter rejected: need 0 < k < n");
  if (ell > k || ell > n - k) throw ParameterRejected("parameter rejected: too many twists for (n, k)");
  const std::uint64_t deg = std::uint64_t{base_degree} << std::min<std::size_t>(ell, 7);
  if (base_degree == 0 || ell > 6 || deg > 64 || deg < 2)
    throw ParameterRejected("parameter rejected: field degree m0*2^l must lie in [2, 64]");
  if (n > subfield_group_order(base_degree))
    throw ParameterRejected("parameter rejected: n <= q0 - 1");
  if (variant == FamilyVariant::F_tilde && subfield_group_order(base_degree) % n != 0)
    throw ParameterRejected("parameter rejected: n | q0 - 1");
  TwistedCodeParams p;
  p.field = FieldTower::make(base_degree, static_cast<unsigned>(ell));
  p.n = n;
  p.k = k;
  p.twists = random_distinct(ell, 1, n - k, rng);
  p.hooks = random_distinct(ell, 0, k - 1, rng);
  for (std::size_t i = 1; i <= ell; ++i) p.eta.push_back(p.field->sample_eta(static_cast<unsigned>(i), rng));
  p.alpha = sample_alpha(*p.field, n, variant, rng);
  return p;
}

bool mds_tower_certificate(const TwistedCodeParams& p) {
  if (!validate_params(p).empty()) return false;
  const FieldTower& f = *p.field;
  if (p.ell() > f.levels()) return false;
  const unsigned d0 = f.subfield_degree(0);
  if (d0 < 64 && p.n > (std::uint64_t{1} << d0)) return false;
  for (Elem a : p.alpha)
    if (!f.is_in_subfield(a, 0)) return false;
  for (std::size_t i = 0; i < p.ell(); ++i) {
    const auto level = static_cast<unsigned>(i + 1);
    if (!f.is_in_subfield(p.eta[i], level) || f.is_in_subfield(p.eta[i], level - 1)) return false;
  }
  return true;
}

CodeMatrix generator_matrix(const TwistedCodeParams& p) {
  if (auto v = validate_params(p); !v.empty()) throw ContractError("invalid code parameters: " + v.front());
  const FieldTower& f = *p.field;
  CodeMatrix g(p.field, p.k, p.n, MatrixRole::generator);
  std::size_t top = p.k;
  for (auto t : p.twists) top = std::max(top, p.k + t);
  // powers[d * n + i] = alpha_i^d
  std::vector<Elem> powers(top * p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    Elem x = 1;
    for (std::size_t d = 0; d < top; ++d) {
      powers[d * p.n + i] = x;
      x = f.mul(x, p.alpha[i]);
    }
  }
  for (std::size_t j = 0; j < p.k; ++j)
    std::copy_n(powers.begin() + static_cast<std::ptrdiff_t>(j * p.n), p.n, g.row(j).begin());
  for (std::size_t mu = 0; mu < p.ell(); ++mu) {
    const std::size_t d = p.k - 1 + p.twists[mu];
    f.axpy(p.eta[mu], std::span<const Elem>(powers.data() + d * p.n, p.n), g.row(p.hooks[mu]));
  }
  return g;
}

SystematicForm systematic_form_with_transform(const CodeMatrix& g) {
  const std::size_t k = g.rows();
  if (g.cols() < k) throw ContractError("systematic_form: fewer columns than rows");
  auto t = inverse(g.column_range(0, k));
  if (!t) throw ContractError("systematic_form: leading k x k block is singular");
  CodeMatrix s = *t * g;
  s.set_role(MatrixRole::systematic_generator);
  return {std::move(s), std::move(*t)};
}

CodeMatrix systematic_form(const CodeMatrix& g) { return systematic_form_with_transform(g).matrix; }

std::vector<Elem> encode(const TwistedCodeParams& p, std::span<const Elem> message) {
  if (message.size() != p.k) throw ContractError("message length must equal k");
  if (auto v = validate_params(p); !v.empty()) throw ContractError("invalid code parameters: " + v.front());
  Poly f(p.field, std::vector<Elem>(message.begin(), message.end()));
  for (std::size_t mu = 0; mu < p.ell(); ++mu)
    f.add_to_coeff(p.k - 1 + p.twists[mu], p.field->mul(p.eta[mu], message[p.hooks[mu]]));
  return eval_vector_unchecked(f, p.alpha);
}

bool is_multiplicative_group(const TwistedCodeParams& p) {
  // n distinct roots of X^n - 1 are the whole group of n-th roots of unity.
  if (p.alpha.size() != p.n || !has_distinct_entries(p.alpha)) return false;
  return std::all_of(p.alpha.begin(), p.alpha.end(),
                     [&](Elem a) { return a != 0 && p.field->pow(a, p.n) == 1; });
}

DualCode dual_params(const TwistedCodeParams& p) {
  if (auto v = validate_params(p); !v.empty()) throw ContractError("invalid code parameters: " + v.front());
  if (!is_multiplicative_group(p))
    throw ContractError("dual_params: evaluation points are not a multiplicative group");
  const FieldTower& f = *p.field;
  const Elem n_image = FieldTower::from_integer(p.n);
  if (n_image == 0) throw ContractError("dual_params: n is zero in the field");
  DualCode d;
  d.params.field = p.field;
  d.params.n = p.n;
  d.params.k = p.n - p.k;
  d.params.alpha = p.alpha;
  for (std::size_t mu = 0; mu < p.ell(); ++mu) {
    d.params.twists.push_back(p.k - p.hooks[mu]);
    d.params.hooks.push_back(p.n - p.k - p.twists[mu]);
    d.params.eta.push_back(FieldTower::neg(p.eta[mu]));
  }
  const Elem n_inv = f.inv(n_image);
  for (Elem a : p.alpha) d.column_multipliers.push_back(f.mul(a, n_inv));

  const CodeMatrix g = generator_matrix(p);
  const CodeMatrix h = dual_generator(d);
  if (!(g * h.transpose()).is_zero()) throw IntegrityError("dual_params: G * H^T != 0");
  return d;
}

CodeMatrix dual_generator(const DualCode& d) {
  CodeMatrix h = generator_matrix(d.params).scale_columns(d.column_multipliers);
  h.set_role(MatrixRole::parity_check);
  return h;
}

bool mds_brute_check(const CodeMatrix& g, kernels::Exec exec) {
  const std::uint64_t minors = kernels::binomial_saturating(g.cols(), g.rows());
  if (minors > kMaxBruteMinors)
    throw ContractError("mds_brute_check: " + std::to_string(minors) +
                        " minors exceed the exhaustive-check limit; use mds_tower_certificate");
  return kernels::all_maximal_minors_nonzero(g, exec);
}

}  // namespace trs
