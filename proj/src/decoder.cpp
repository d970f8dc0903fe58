#include "trs/decoder.hpp"

#include <atomic>
#include <string>

#include "trs/error.hpp"
#include "trs/matrix.hpp"

namespace trs {

RsDecoder::RsDecoder(FieldPtr field, std::vector<Elem> alpha, std::size_t k, std::size_t tau)
    : field_(std::move(field)),
      alpha_(std::move(alpha)),
      k_(k),
      tau_(tau),
      vanishing_(Poly::from_roots(field_, alpha_)) {
  const std::size_t n = alpha_.size();
  if (k_ == 0 || k_ >= n) throw ContractError("rs_decode: need 0 < k < n");
  if (tau_ > unique_radius(n, k_))
    throw ContractError("rs_decode: tau " + std::to_string(tau_) + " exceeds floor((n-k)/2) = " +
                        std::to_string(unique_radius(n, k_)));
  if (!has_distinct_entries(alpha_)) throw ContractError("rs_decode: evaluation points not distinct");
}

std::optional<Poly> RsDecoder::decode(std::span<const Elem> received) const {
  if (received.size() != alpha_.size()) throw ContractError("rs_decode: received length != n");
  return decode_interpolated(interpolate(field_, alpha_, received), received);
}

std::optional<Poly> RsDecoder::decode_interpolated(const Poly& interpolant,
                                                   std::span<const Elem> received) const {
  const std::size_t n = alpha_.size();
  Poly f(field_);
  if (!interpolant.is_zero()) {
    const auto [u, v, r] = euclid_step_sequence(vanishing_, interpolant, (n + k_ + 1) / 2);
    (void)u;
    if (v.is_zero() || !(r.degree() < (n + k_ + 1) / 2)) return std::nullopt;
    // v is the error locator: more than tau roots cannot be within radius
    if (!(v.degree() < tau_ + 1)) return std::nullopt;
    auto [quot, rem] = divmod(r, v);
    if (!rem.is_zero() || !(quot.degree() < k_)) return std::nullopt;
    f = std::move(quot);
  }
  std::size_t dist = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (f(alpha_[i]) != received[i] && ++dist > tau_) return std::nullopt;
  }
  return f;
}

std::optional<Poly> rs_decode(std::span<const Elem> received, std::span<const Elem> alpha,
                              std::size_t k, std::size_t tau, const FieldPtr& field) {
  return RsDecoder(field, std::vector<Elem>(alpha.begin(), alpha.end()), k, tau).decode(received);
}

namespace {

struct GuessContext {
  const TwistedCodeParams& p;
  const RsDecoder& rs;
  const Poly& interpolant;
  std::span<const Elem> received;
  std::size_t tau;
  // twist_powers[i][j] = alpha_j^(k-1+t_i)
  std::vector<std::vector<Elem>> twist_powers;
};

void guess_digits(std::uint64_t index, std::size_t ell, unsigned m, std::vector<Elem>& g) {
  const Elem mask = m == 64 ? ~Elem{0} : ((Elem{1} << m) - 1);
  for (std::size_t i = ell; i-- > 0;) {
    g[i] = index & mask;
    index = m == 64 ? 0 : index >> m;
  }
}

// One round: shift the interpolant by the guessed twist contribution,
// RS-decode, sift, and check the full twisted codeword distance.
std::optional<DecodeResult> try_guess(const GuessContext& ctx, std::span<const Elem> g,
                                      std::vector<Elem>& shifted_received, DecodeStats& stats) {
  const TwistedCodeParams& p = ctx.p;
  const FieldTower& f = *p.field;
  Poly shifted = ctx.interpolant;
  std::copy(ctx.received.begin(), ctx.received.end(), shifted_received.begin());
  for (std::size_t i = 0; i < p.ell(); ++i) {
    const Elem c = f.mul(g[i], p.eta[i]);
    if (c == 0) continue;
    const std::size_t d = p.k - 1 + p.twists[i];
    shifted.add_to_coeff(d, c);
    f.axpy(c, ctx.twist_powers[i], shifted_received);
  }
  ++stats.rs_rounds;
  auto fhat = ctx.rs.decode_interpolated(shifted, shifted_received);
  if (!fhat) return std::nullopt;
  for (std::size_t i = 0; i < p.ell(); ++i) {
    if (fhat->coeff(p.hooks[i]) != g[i]) {
      ++stats.sift_discards;
      return std::nullopt;
    }
  }
  DecodeResult res;
  res.message.resize(p.k);
  for (std::size_t j = 0; j < p.k; ++j) res.message[j] = fhat->coeff(j);
  res.codeword = encode(p, res.message);
  for (std::size_t j = 0; j < p.n; ++j)
    if (res.codeword[j] != ctx.received[j]) res.error_positions.push_back(j);
  if (res.error_positions.size() > ctx.tau) {
    ++stats.distance_rejects;
    return std::nullopt;
  }
  res.guesses.assign(g.begin(), g.end());
  ++stats.accepted;
  return res;
}

void merge(std::optional<DecodeResult>& into, DecodeResult&& candidate) {
  if (into) throw IntegrityError("twisted_decode: two candidates accepted inside the unique radius");
  into = std::move(candidate);
}

TwistedDecodeOutcome scan_serial(const GuessContext& ctx, std::uint64_t total, ScanMode mode) {
  TwistedDecodeOutcome out;
  std::vector<Elem> g(ctx.p.ell());
  std::vector<Elem> scratch(ctx.p.n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    guess_digits(idx, ctx.p.ell(), ctx.p.field->degree(), g);
    if (auto r = try_guess(ctx, g, scratch, out.stats)) {
      merge(out.result, std::move(*r));
      if (mode == ScanMode::first_accept) break;
    }
  }
  return out;
}

TwistedDecodeOutcome scan_parallel(const GuessContext& ctx, std::uint64_t total, ScanMode mode) {
  TwistedDecodeOutcome out;
  std::atomic<bool> stop{false};
  std::uint64_t rounds = 0, discards = 0, rejects = 0, accepted = 0;
  bool integrity_failure = false;
#pragma omp parallel reduction(+ : rounds, discards, rejects, accepted)
  {
    DecodeStats local;
    std::vector<Elem> g(ctx.p.ell());
    std::vector<Elem> scratch(ctx.p.n);
#pragma omp for schedule(dynamic, 64)
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (stop.load(std::memory_order_relaxed)) continue;
      guess_digits(idx, ctx.p.ell(), ctx.p.field->degree(), g);
      if (auto r = try_guess(ctx, g, scratch, local)) {
#pragma omp critical(trs_decode_merge)
        {
          if (out.result) integrity_failure = true;
          else out.result = std::move(*r);
        }
        if (mode == ScanMode::first_accept) stop.store(true, std::memory_order_relaxed);
      }
    }
    rounds += local.rs_rounds;
    discards += local.sift_discards;
    rejects += local.distance_rejects;
    accepted += local.accepted;
  }
  if (integrity_failure)
    throw IntegrityError("twisted_decode: two candidates accepted inside the unique radius");
  out.stats = {rounds, discards, rejects, accepted};
  return out;
}

}  // namespace

TwistedDecodeOutcome twisted_decode(std::span<const Elem> received, const TwistedCodeParams& p,
                                    std::size_t tau, const TwistedDecodeOptions& options) {
  if (auto v = validate_params(p); !v.empty()) throw ContractError("invalid code parameters: " + v.front());
  if (received.size() != p.n) throw ContractError("twisted_decode: received length != n");
  for (Elem e : received)
    if (!p.field->contains(e)) throw ContractError("twisted_decode: received symbol outside the field");
  const RsDecoder rs(p.field, p.alpha, p.k, tau);

  const unsigned __int128 guesses =
      p.field->degree() * p.ell() >= 128
          ? ~static_cast<unsigned __int128>(0)
          : static_cast<unsigned __int128>(1) << (p.field->degree() * p.ell());
  if (guesses > options.budget)
    throw BudgetExceeded("twisted_decode: q^l guesses exceed the budget of " +
                         std::to_string(options.budget) + " RS rounds");

  const Poly interpolant = interpolate(p.field, p.alpha, received);
  GuessContext ctx{p, rs, interpolant, received, tau, {}};
  for (std::size_t i = 0; i < p.ell(); ++i) {
    std::vector<Elem> row(p.n);
    for (std::size_t j = 0; j < p.n; ++j) row[j] = p.field->pow(p.alpha[j], p.k - 1 + p.twists[i]);
    ctx.twist_powers.push_back(std::move(row));
  }
  const auto total = static_cast<std::uint64_t>(guesses);
  return options.exec == kernels::Exec::serial ? scan_serial(ctx, total, options.mode)
                                               : scan_parallel(ctx, total, options.mode);
}

}  // namespace trs
