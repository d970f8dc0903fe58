#include "trs/text_format.hpp"

#include <map>
#include <sstream>

#include "trs/error.hpp"

namespace trs {

std::string hex_elem(Elem a) {
  std::ostringstream os;
  os << "0x" << std::hex << a;
  return os.str();
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& v, F&& f) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + f(v[i]);
  return s;
}

std::string dec(std::size_t v) { return std::to_string(v); }

}  // namespace

std::string format_params_kv(const TwistedCodeParams& p) {
  std::ostringstream os;
  os << "q0 = " << (std::uint64_t{1} << p.field->base_degree()) << "\n";
  os << "field.m = " << p.field->degree() << "\n";
  os << "field.m0 = " << p.field->base_degree() << "\n";
  os << "field.levels = " << p.field->levels() << "\n";
  os << "field.modulus = " << hex_elem(p.field->modulus()) << "\n";
  os << "n = " << p.n << "\nk = " << p.k << "\nell = " << p.ell() << "\n";
  os << "t = " << join(p.twists, dec) << "\n";
  os << "h = " << join(p.hooks, dec) << "\n";
  os << "eta = " << join(p.eta, hex_elem) << "\n";
  os << "alpha = " << join(p.alpha, hex_elem) << "\n";
  return os.str();
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& tok, int base) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(tok, &used, base);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) throw FormatError("params: bad value '" + tok + "' for " + key);
  return v;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

TwistedCodeParams read_params_kv(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("params: line without '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw FormatError("params: missing key '" + key + "'");
    return it->second;
  };
  const auto m0 = static_cast<unsigned>(parse_u64("field.m0", get("field.m0"), 10));
  const auto levels = static_cast<unsigned>(parse_u64("field.levels", get("field.levels"), 10));
  const std::uint64_t modulus = parse_u64("field.modulus", get("field.modulus"), 16);
  if (m0 == 0 || m0 > 64 || levels > 6 || (std::uint64_t{m0} << levels) > 64)
    throw FormatError("params: unsupported tower degree");
  if (parse_u64("q0", get("q0"), 10) != (std::uint64_t{1} << m0)) throw FormatError("params: q0 != 2^m0");
  TwistedCodeParams p;
  try {
    p.field = FieldTower::make(m0, levels, modulus);
  } catch (const ContractError& e) {
    throw FormatError(std::string("params: field descriptor: ") + e.what());
  }
  if (parse_u64("field.m", get("field.m"), 10) != p.field->degree())
    throw FormatError("params: field.m does not match m0 * 2^levels");
  p.n = parse_u64("n", get("n"), 10);
  p.k = parse_u64("k", get("k"), 10);
  const std::size_t ell = parse_u64("ell", get("ell"), 10);
  for (const auto& t : tokens(get("t"))) p.twists.push_back(parse_u64("t", t, 10));
  for (const auto& t : tokens(get("h"))) p.hooks.push_back(parse_u64("h", t, 10));
  auto elems = [&](const std::string& key) {
    std::vector<Elem> v;
    for (const auto& t : tokens(get(key))) {
      const Elem e = parse_u64(key, t, 16);
      if (!p.field->contains(e)) throw FormatError("params: " + key + " element outside the field");
      v.push_back(e);
    }
    return v;
  };
  p.eta = elems("eta");
  p.alpha = elems("alpha");
  if (p.twists.size() != ell || p.hooks.size() != ell || p.eta.size() != ell)
    throw FormatError("params: t, h and eta must each have ell entries");
  if (p.alpha.size() != p.n) throw FormatError("params: alpha must have n entries");
  if (auto v = validate_params(p); !v.empty()) throw FormatError("params: " + v.front());
  return p;
}

std::string format_shape_kv(const FamilyShape& s) {
  std::ostringstream os;
  os << "n = " << s.n << "\nk = " << s.k << "\nell = " << s.ell << "\n";
  os << "q0 = 2^" << s.base_degree << "\n";
  os << "q = 2^" << s.field_degree << "\n";
  os << "r = " << s.r << "\n";
  os << "t = " << join(s.twists, dec) << "\n";
  os << "h = " << join(s.hooks, dec) << "\n";
  for (const auto& c : s.checks)
    os << "check." << c.name << " = " << (c.satisfied ? "ok" : "FAILED") << " (" << c.detail << ")\n";
  os << "valid = " << (s.ok() ? "yes" : "no") << "\n";
  return os.str();
}

std::string write_matrix_text(const CodeMatrix& m) {
  std::ostringstream os;
  os << "trs-matrix 1\n";
  os << "field " << m.field()->base_degree() << " " << m.field()->levels() << " "
     << hex_elem(m.field()->modulus()) << "\n";
  os << "size " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << hex_elem(m.at(r, c));
    os << "\n";
  }
  return os.str();
}

CodeMatrix read_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::ostringstream body;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') body << line << "\n";
  std::istringstream is(body.str());
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != "trs-matrix" || version != 1)
    throw FormatError("matrix text: missing 'trs-matrix 1' header");
  unsigned m0 = 0, levels = 0;
  std::string modulus;
  if (!(is >> tag >> m0 >> levels >> modulus) || tag != "field")
    throw FormatError("matrix text: bad field line");
  FieldPtr field;
  try {
    field = FieldTower::make(m0, levels, std::stoull(modulus, nullptr, 16));
  } catch (const ContractError& e) {
    throw FormatError(std::string("matrix text: field descriptor: ") + e.what());
  } catch (const std::logic_error&) {
    throw FormatError("matrix text: bad modulus");
  }
  std::size_t rows = 0, cols = 0;
  if (!(is >> tag >> rows >> cols) || tag != "size" || rows == 0 || cols == 0)
    throw FormatError("matrix text: bad size line");
  CodeMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string tok;
      if (!(is >> tok)) throw FormatError("matrix text: truncated entries");
      std::size_t used = 0;
      Elem v = 0;
      try {
        v = std::stoull(tok, &used, 16);
      } catch (const std::logic_error&) {
        throw FormatError("matrix text: bad entry '" + tok + "'");
      }
      if (used != tok.size() || !field->contains(v))
        throw FormatError("matrix text: bad entry '" + tok + "'");
      m.at(r, c) = v;
    }
  std::string extra;
  if (is >> extra) throw FormatError("matrix text: trailing data");
  return m;
}

}  // namespace trs
