// trs: batch command-line front end for the twisted RS library.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trs/cryptosystem.hpp"
#include "trs/error.hpp"
#include "trs/kernels.hpp"
#include "trs/schur_analysis.hpp"
#include "trs/text_format.hpp"
#include "trs/twisted_code.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kRejected = 2,
  kIo = 3,
  kFormat = 4,
  kDecodeFailure = 5,
  kIntegrity = 6,
  kBudget = 7,
  kContract = 8,
};

constexpr const char* kExitHelp =
    "Exit status:\n"
    "  0  success\n"
    "  1  invalid command line\n"
    "  2  parameters rejected (family inequalities or definition constraints)\n"
    "  3  file I/O error\n"
    "  4  malformed key, ciphertext, matrix or message\n"
    "  5  decoding failure\n"
    "  6  integrity check failed (inconsistent key or decoder state)\n"
    "  7  guess budget exceeded\n"
    "  8  other precondition violated\n"
    "Environment: TRS_THREADS sets the default thread count.\n";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_text(const std::string& path, const std::string& text) {
  write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

// Decimal u64 or exactly 64 hex digits.
trs::Seed parse_seed(const std::string& s) {
  if (s.size() == 64) {
    trs::Seed seed{};
    for (std::size_t i = 0; i < 32; ++i) {
      std::size_t used = 0;
      const std::string byte = s.substr(2 * i, 2);
      unsigned long v = 0;
      try {
        v = std::stoul(byte, &used, 16);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != 2) throw CLI::ValidationError("--seed", "64-digit hex seed has a non-hex digit");
      seed[i] = static_cast<std::uint8_t>(v);
    }
    return seed;
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, 10);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-')
    throw CLI::ValidationError("--seed", "expected a decimal integer or 64 hex digits");
  return trs::seed_from_u64(v);
}

std::string seed_hex(const trs::Seed& seed) {
  std::ostringstream os;
  for (auto b : seed) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
  return os.str();
}

unsigned base_degree_of(std::uint64_t q0) {
  if (q0 < 4 || (q0 & (q0 - 1)) != 0) throw CLI::ValidationError("--q0", "must be a power of two >= 4");
  unsigned m0 = 0;
  while ((std::uint64_t{1} << m0) != q0) ++m0;
  return m0;
}

trs::FamilyVariant variant_of(const std::string& v) {
  return v == "F" ? trs::FamilyVariant::F : trs::FamilyVariant::F_tilde;
}

// Hex elements separated by spaces or commas.
std::vector<trs::Elem> parse_elements(std::string s, const trs::FieldTower& f) {
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<trs::Elem> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    trs::Elem v = 0;
    try {
      v = std::stoull(tok, &used, 16);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size() || !f.contains(v)) throw trs::FormatError("bad field element '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string join_hex(const std::vector<trs::Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + trs::hex_elem(v[i]);
  return s;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

struct Common {
  std::string format = "text";
  int threads = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  sub->add_option("--threads", c.threads, "Worker threads (0: TRS_THREADS or runtime default)")
      ->check(CLI::NonNegativeNumber);
}

void apply_threads(const Common& c) {
  if (c.threads > 0) trs::kernels::set_threads(c.threads);
}

// ---- params -----------------------------------------------------------------

struct ParamsCmd {
  Common common;
  std::size_t n = 0, k = 0, ell = 1;
  std::uint64_t q0 = 0;
  std::string variant = "F";
  std::string seed;
};

int run_params(const ParamsCmd& c) {
  const auto shape = trs::family_shape(c.n, c.k, c.ell, base_degree_of(c.q0), variant_of(c.variant));
  if (c.common.format == "kv") {
    std::cout << trs::format_shape_kv(shape);
  } else {
    std::cout << "family " << c.variant << " with (n, k, l) = (" << c.n << ", " << c.k << ", " << c.ell
              << "), q0 = 2^" << shape.base_degree << "\n";
    std::cout << "  r = " << shape.r << "\n  q = 2^" << shape.field_degree << "\n";
    auto list = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
      return s;
    };
    std::cout << "  t = (" << list(shape.twists) << ")\n  h = (" << list(shape.hooks) << ")\n";
    for (const auto& chk : shape.checks)
      std::cout << "  [" << (chk.satisfied ? " ok " : "FAIL") << "] " << chk.name << "  " << chk.detail
                << "\n";
  }
  if (!shape.ok()) {
    for (const auto& chk : shape.checks)
      if (!chk.satisfied) std::cerr << "trs: parameter rejected: " << chk.name << "\n";
    return kRejected;
  }
  if (!c.seed.empty()) {
    const auto seed = parse_seed(c.seed);
    trs::Rng rng(seed);
    const auto p = trs::family_f_params(c.n, c.k, c.ell, shape.base_degree, variant_of(c.variant), rng);
    std::cout << "seed = " << seed_hex(seed) << "\n";
    std::cout << trs::format_params_kv(p);
    std::cout << "mds_certificate = " << (trs::mds_tower_certificate(p) ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---- keygen -----------------------------------------------------------------

struct KeygenCmd {
  Common common;
  std::size_t n = 0, k = 0, ell = 1;
  std::uint64_t q0 = 0;
  std::string variant = "F";
  std::string seed = "0";
  bool relaxed = false;
  std::string out_public, out_secret;
};

int run_keygen(const KeygenCmd& c) {
  apply_threads(c.common);
  const auto seed = parse_seed(c.seed);
  const auto kp =
      trs::keygen(c.n, c.k, c.ell, base_degree_of(c.q0), variant_of(c.variant), seed, c.relaxed);
  const auto pub = trs::serialize_public(kp.pub);
  write_file(c.out_public, pub);
  write_file(c.out_secret, trs::serialize_secret(kp.sec));
  std::cout << "seed = " << seed_hex(seed) << "\n";
  std::cout << "rng = " << trs::Rng::kAlgorithm << "\n";
  std::cout << "n = " << kp.pub.n << "\nk = " << kp.pub.k << "\ntau = " << kp.pub.tau << "\n";
  std::cout << "q = 2^" << kp.pub.field->degree() << "\n";
  std::cout << "public_key_bytes = " << pub.size() << "\n";
  std::cout << "mds_certificate = " << (trs::mds_tower_certificate(kp.sec.params) ? "yes" : "no")
            << "\n";
  return kOk;
}

// ---- encrypt / decrypt ------------------------------------------------------

struct EncryptCmd {
  Common common;
  std::string key, in, message, out;
  std::string seed = "0";
  std::optional<std::size_t> errors;
};

int run_encrypt(const EncryptCmd& c) {
  const auto pk = trs::deserialize_public(read_file(c.key));
  std::vector<trs::Elem> m;
  if (!c.message.empty()) {
    m = parse_elements(c.message, *pk.field);
    if (m.size() != pk.k) throw trs::FormatError("--message needs exactly k = " + std::to_string(pk.k) + " elements");
  } else {
    m = trs::pack_message(read_file(c.in), pk.field->base_degree(), pk.k);
  }
  const auto seed = parse_seed(c.seed);
  const std::size_t weight = c.errors.value_or(pk.tau);
  const auto ct = trs::encrypt_with_weight(pk, m, seed, weight);
  write_file(c.out, trs::serialize_ciphertext(*pk.field, ct));
  std::cout << "seed = " << seed_hex(seed) << "\n";
  std::cout << "errors = " << weight << "\n";
  std::cout << "ciphertext_symbols = " << ct.size() << "\n";
  return kOk;
}

struct DecryptCmd {
  Common common;
  std::string key, in, out;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::optional<std::size_t> tau;
};

int run_decrypt(const DecryptCmd& c) {
  apply_threads(c.common);
  auto sk = trs::deserialize_secret(read_file(c.key));
  if (c.tau) {
    if (*c.tau > (sk.params.n - sk.params.k) / 2)
      throw trs::ContractError("--tau exceeds floor((n-k)/2) = " + std::to_string((sk.params.n - sk.params.k) / 2));
    sk.tau = *c.tau;
  }
  const auto ct = trs::deserialize_ciphertext(*sk.params.field, read_file(c.in));
  trs::TwistedDecodeOptions opt;
  opt.budget = c.budget;
  const auto res = trs::decrypt(sk, ct, opt);
  std::cout << "rs_rounds = " << res.stats.rs_rounds << "\n";
  std::cout << "sift_discards = " << res.stats.sift_discards << "\n";
  if (!res.message) {
    std::cerr << "trs: decoding failure: no codeword within tau = " << sk.tau << "\n";
    return kDecodeFailure;
  }
  std::cout << "message = " << join_hex(*res.message) << "\n";
  if (!c.out.empty()) write_file(c.out, trs::unpack_message(*res.message, sk.params.field->base_degree()));
  return kOk;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeCmd {
  Common common;
  std::string key, secret, matrix;
  std::size_t singles = SIZE_MAX;
  std::size_t pairs = 10;
  std::uint64_t pair_seed = 1;
};

int run_analyze(const AnalyzeCmd& c) {
  apply_threads(c.common);
  if (c.key.empty() == c.matrix.empty()) throw CLI::ValidationError("analyze", "give exactly one of --key, --matrix");
  std::optional<trs::SecretKey> sk;
  std::optional<trs::CodeMatrix> g;
  if (!c.matrix.empty()) {
    const auto bytes = read_file(c.matrix);
    g = trs::read_matrix_text(std::string(bytes.begin(), bytes.end()));
  } else {
    const auto bytes = read_file(c.key);
    if (trs::peek_key_role(bytes) == trs::KeyRole::secret_key) {
      sk = trs::deserialize_secret(bytes);
      g = trs::public_generator(trs::derive_public(*sk));
    } else {
      g = trs::public_generator(trs::deserialize_public(bytes));
    }
  }
  if (!c.secret.empty()) {
    sk = trs::deserialize_secret(read_file(c.secret));
    if (!trs::same_row_space(*g, trs::generator_matrix(sk->params)))
      throw trs::IntegrityError("analyze: secret key does not match the analyzed code");
  }
  trs::ReportOptions opt;
  opt.single_positions = c.singles;
  opt.pair_samples = c.pairs;
  opt.pair_seed = c.pair_seed;
  const auto report = trs::distinguisher_report(*g, sk ? &sk->params : nullptr, opt);

  std::ostringstream extra;
  if (sk) {
    extra << "mds_certificate = " << (trs::mds_tower_certificate(sk->params) ? "yes" : "no") << "\n";
    const auto minors = trs::kernels::binomial_saturating(g->cols(), g->rows());
    if (minors <= trs::kMaxBruteMinors)
      extra << "mds_brute_check = " << (trs::mds_brute_check(*g) ? "yes" : "no") << "\n";
    else
      extra << "mds_brute_check = skipped (" << minors << " minors)\n";
    if (trs::is_multiplicative_group(sk->params)) {
      trs::dual_params(sk->params);  // throws IntegrityError when G*H^T != 0
      extra << "dual_check = ok\n";
    } else {
      extra << "dual_check = not-applicable\n";
    }
  }
  if (c.common.format == "kv")
    std::cout << trs::serialize_report(report) << extra.str();
  else
    std::cout << trs::format_report_text(report) << extra.str();
  return kOk;
}

// ---- estimate ---------------------------------------------------------------

struct EstimateCmd {
  Common common;
  std::size_t n = 0, k = 0;
  double log2q = 0;
  std::optional<std::size_t> tau;
};

int run_estimate(const EstimateCmd& c) {
  const std::size_t tau = c.tau.value_or((c.n - c.k) / 2);
  const auto e = trs::security_estimate(c.n, c.k, c.log2q, tau);
  if (c.common.format == "kv") {
    std::cout << "n = " << c.n << "\nk = " << c.k << "\nlog2q = " << c.log2q << "\ntau = " << tau << "\n";
    std::cout << "work_factor_log2 = " << fixed(e.work_factor_log2, 6) << "\n";
    std::cout << "key_size_kb = " << fixed(e.key_size_kb, 6) << "\n";
    std::cout << "tau_unique = " << e.tau_unique << "\ntau_list = " << e.tau_list << "\n";
    std::cout << "keyspace_log2 = " << fixed(e.keyspace_log2, 3) << "\n";
  } else {
    std::cout << "(n, k) = (" << c.n << ", " << c.k << "), log2 q = " << c.log2q << ", tau = " << tau << "\n";
    std::cout << "  ISD work factor     W_I >= 2^" << std::floor(e.work_factor_log2) << "  (2^"
              << fixed(e.work_factor_log2, 2) << ")\n";
    std::cout << "  systematic key      K_sys = " << fixed(e.key_size_kb, 1) << " KB\n";
    std::cout << "  unique radius       tau_unique = " << e.tau_unique << "\n";
    std::cout << "  Johnson radius      tau_list = " << e.tau_list << "\n";
    std::cout << "  family size         2^" << fixed(e.keyspace_log2, 1)
              << "  (upper estimate of inequivalent keys)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  trs::kernels::apply_thread_env();
  CLI::App app{"Twisted Reed-Solomon codes: parameters, McEliece keys, Schur-square analysis"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  ParamsCmd pc;
  auto* params = app.add_subcommand("params", "Derive and check family parameters");
  params->add_option("--n", pc.n, "Code length")->required();
  params->add_option("--k", pc.k, "Dimension")->required();
  params->add_option("--l", pc.ell, "Number of twists");
  params->add_option("--q0", pc.q0, "Base field size (power of two)")->required();
  params->add_option("--variant", pc.variant)->check(CLI::IsMember({"F", "Ftilde"}));
  params->add_option("--seed", pc.seed, "Also draw a member (decimal or 64 hex digits)");
  add_common(params, pc.common);

  KeygenCmd kc;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--n", kc.n)->required();
  keygen->add_option("--k", kc.k)->required();
  keygen->add_option("--l", kc.ell);
  keygen->add_option("--q0", kc.q0)->required();
  keygen->add_option("--variant", kc.variant)->check(CLI::IsMember({"F", "Ftilde"}));
  keygen->add_option("--seed", kc.seed, "Decimal or 64 hex digits");
  keygen->add_flag("--relaxed", kc.relaxed, "Skip the family inequalities (small test profiles)");
  keygen->add_option("--public", kc.out_public, "Public key output file")->required();
  keygen->add_option("--secret", kc.out_secret, "Secret key output file")->required();
  add_common(keygen, kc.common);

  EncryptCmd ec;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message under a public key");
  encrypt->add_option("--key", ec.key, "Public key file")->required();
  auto* in_opt = encrypt->add_option("--in", ec.in, "Message bytes (length-prefixed m0-bit codec)");
  auto* msg_opt = encrypt->add_option("--message", ec.message, "Raw message: k hex field elements");
  in_opt->excludes(msg_opt);
  encrypt->add_option("--out", ec.out, "Ciphertext output file")->required();
  encrypt->add_option("--seed", ec.seed, "Error-vector seed");
  encrypt->add_option("--errors", ec.errors, "Error weight (default tau; larger values exercise failures)");
  add_common(encrypt, ec.common);

  DecryptCmd dc;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext with a secret key");
  decrypt->add_option("--key", dc.key, "Secret key file")->required();
  decrypt->add_option("--in", dc.in, "Ciphertext file")->required();
  decrypt->add_option("--out", dc.out, "Write the decoded message bytes here");
  decrypt->add_option("--budget", dc.budget, "Maximum number of RS decoding rounds");
  decrypt->add_option("--tau", dc.tau, "Decoding radius (default: the radius stored in the key)");
  add_common(decrypt, dc.common);

  AnalyzeCmd ac;
  auto* analyze = app.add_subcommand("analyze", "Schur-square structural report");
  analyze->add_option("--key", ac.key, "Public or secret key file");
  analyze->add_option("--matrix", ac.matrix, "Generator matrix text file");
  analyze->add_option("--secret", ac.secret, "Secret key for the certificate, bounds and dual check");
  analyze->add_option("--singles", ac.singles, "Shorten at each of the first N positions");
  analyze->add_option("--pairs", ac.pairs, "Number of sampled two-position shortenings");
  analyze->add_option("--pair-seed", ac.pair_seed, "Seed for the sampled pairs");
  add_common(analyze, ac.common);

  EstimateCmd sc;
  auto* estimate = app.add_subcommand("estimate", "ISD work factor and key size");
  estimate->add_option("--n", sc.n)->required();
  estimate->add_option("--k", sc.k)->required();
  estimate->add_option("--log2q", sc.log2q)->required();
  estimate->add_option("--tau", sc.tau, "Number of errors (default floor((n-k)/2))");
  add_common(estimate, sc.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return run_params(pc);
    if (*keygen) return run_keygen(kc);
    if (*encrypt) {
      if (ec.in.empty() && ec.message.empty()) throw CLI::ValidationError("encrypt", "give --in or --message");
      return run_encrypt(ec);
    }
    if (*decrypt) return run_decrypt(dc);
    if (*analyze) return run_analyze(ac);
    if (*estimate) return run_estimate(sc);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "trs: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "trs: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const trs::ParameterRejected& e) {
    std::cerr << "trs: " << e.what() << "\n";
    return kRejected;
  } catch (const trs::FormatError& e) {
    std::cerr << "trs: format error: " << e.what() << "\n";
    return kFormat;
  } catch (const trs::IntegrityError& e) {
    std::cerr << "trs: integrity check failed: " << e.what() << "\n";
    return kIntegrity;
  } catch (const trs::BudgetExceeded& e) {
    std::cerr << "trs: " << e.what() << "\n";
    return kBudget;
  } catch (const trs::Error& e) {
    std::cerr << "trs: precondition violated: " << e.what() << "\n";
    return kContract;
  }
  return kUsage;
}
