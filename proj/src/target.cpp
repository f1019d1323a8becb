#include "sadic/target.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace sadic {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "3/2", "1.5", "2" -> exact rational.
Rational parse_rational(const std::string& text) {
  static const std::regex frac(R"(^(\d+)\s*/\s*(\d+)$)");
  static const std::regex dec(R"(^(\d+)(?:\.(\d+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    const BigInt den(m[2].str());
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(BigInt(m[1].str()), den);
  }
  if (std::regex_match(text, m, dec)) {
    std::string digits = m[1].str() + m[2].str();
    BigInt den = 1;
    for (std::size_t k = 0; k < m[2].length(); ++k) den *= 10;
    return Rational(BigInt(digits), den);
  }
  throw std::invalid_argument("not a nonnegative rational: '" + text + "'");
}

BigInt pow_u(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint32_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2(0)");
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

ComplexityTarget ComplexityTarget::power(const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("target exponent must be positive");
  ComplexityTarget t;
  t.kind_ = Kind::Power;
  t.alpha_ = alpha;
  t.expr_ = "n^" + to_string(alpha);
  if (alpha >= 1) t.monotone_from_ = 1;
  return t;
}

ComplexityTarget ComplexityTarget::n_log(std::uint32_t beta) {
  ComplexityTarget t;
  t.kind_ = Kind::NLog;
  t.beta_ = beta;
  t.expr_ = "n*log2(n)^" + std::to_string(beta);
  t.monotone_from_ = 1;
  return t;
}

ComplexityTarget ComplexityTarget::table(std::map<std::uint64_t, Rational> values) {
  if (values.empty()) throw std::invalid_argument("target table is empty");
  for (const auto& [n, p] : values) {
    if (n == 0) throw std::invalid_argument("target table: n must be >= 1");
    if (p <= 0) throw std::invalid_argument("target table: p_n must be positive (n=" + std::to_string(n) + ")");
  }
  ComplexityTarget t;
  t.kind_ = Kind::Table;
  t.table_ = std::move(values);
  t.expr_ = "table";
  return t;
}

ComplexityTarget ComplexityTarget::parse(const std::string& raw) {
  const std::string expr = trim(raw);
  if (!expr.empty() && expr[0] == '@') {
    const std::string path = expr.substr(1);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open target table '" + path + "'");
    std::map<std::uint64_t, Rational> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected n,p");
      const std::string ns = trim(line.substr(0, comma));
      if (lineno == 1 && ns == "n") continue;
      values[std::stoull(ns)] = parse_rational(trim(line.substr(comma + 1)));
    }
    ComplexityTarget t = table(std::move(values));
    t.expr_ = expr;
    return t;
  }
  static const std::regex pow_re(R"(^n\s*(?:\^\s*\(?\s*([0-9./ ]+?)\s*\)?)?$)");
  static const std::regex log_re(R"(^n\s*\*\s*log2\s*\(\s*n\s*\)\s*(?:\^\s*(\d+))?$)");
  std::smatch m;
  if (std::regex_match(expr, m, log_re)) {
    ComplexityTarget t = n_log(m[1].matched ? static_cast<std::uint32_t>(std::stoul(m[1].str())) : 1);
    t.expr_ = expr;
    return t;
  }
  if (std::regex_match(expr, m, pow_re)) {
    ComplexityTarget t = power(m[1].matched ? parse_rational(m[1].str()) : Rational(1));
    t.expr_ = expr;
    return t;
  }
  throw std::invalid_argument("cannot parse target '" + expr +
                              "' (expected n^<rational>, n*log2(n)^<int> or @table.csv)");
}

bool ComplexityTarget::defined_at(std::uint64_t n) const {
  if (n == 0) return false;
  if (kind_ == Kind::Table) return table_.count(n) > 0;
  if (kind_ == Kind::NLog && beta_ > 0) return n >= 2;
  return true;
}

std::optional<std::uint64_t> ComplexityTarget::horizon() const {
  if (kind_ == Kind::Table) return table_.rbegin()->first;
  return std::nullopt;
}

bool ComplexityTarget::exceeds(const BigInt& lhs, std::uint64_t n) const {
  if (!defined_at(n)) throw std::out_of_range("target undefined at n=" + std::to_string(n));
  switch (kind_) {
    case Kind::Power: {
      // lhs < n^(a/b)  <=>  lhs^b < n^a  (lhs >= 0)
      if (lhs < 0) return true;
      const auto a = BigInt(mp::numerator(alpha_)).convert_to<std::uint64_t>();
      const auto b = BigInt(mp::denominator(alpha_)).convert_to<std::uint64_t>();
      return pow_u(lhs, b) < pow_u(BigInt(n), a);
    }
    case Kind::NLog:
      return lhs < BigInt(n) * pow_u(BigInt(ceil_log2(n)), beta_);
    case Kind::Table:
      return Rational(lhs) < table_.at(n);
  }
  return false;
}

long double ComplexityTarget::approx(std::uint64_t n) const {
  switch (kind_) {
    case Kind::Power:
      return std::pow(static_cast<long double>(n), alpha_.convert_to<long double>());
    case Kind::NLog:
      return static_cast<long double>(n) *
             std::pow(static_cast<long double>(ceil_log2(n)), static_cast<long double>(beta_));
    case Kind::Table:
      return table_.at(n).convert_to<long double>();
  }
  return 0;
}

}  // namespace sadic
