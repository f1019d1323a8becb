#pragma once

// Complexity targets p_n: n^(a/b), n*ceil(log2 n)^beta, or an explicit table.

#include "sadic/exact_linear.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace sadic {

class ComplexityTarget {
 public:
  enum class Kind { Power, NLog, Table };

  static ComplexityTarget power(const Rational& alpha);
  static ComplexityTarget n_log(std::uint32_t beta);
  static ComplexityTarget table(std::map<std::uint64_t, Rational> values);

  /// "n^3/2", "n^1.5", "n", "n*log2(n)^2", or "@file.csv" (columns n,p).
  static ComplexityTarget parse(const std::string& expr);

  Kind kind() const { return kind_; }
  const std::string& expression() const { return expr_; }
  bool defined_at(std::uint64_t n) const;
  /// Exact test lhs < p_n.
  bool exceeds(const BigInt& lhs, std::uint64_t n) const;
  /// p_n as a floating value, for reporting ratios only.
  long double approx(std::uint64_t n) const;
  /// n0 with p_n/n nondecreasing for n >= n0, when known.
  std::optional<std::uint64_t> monotone_from() const { return monotone_from_; }
  /// Largest n at which the target is defined (tables only).
  std::optional<std::uint64_t> horizon() const;

 private:
  Kind kind_ = Kind::Power;
  std::string expr_;
  Rational alpha_ = 1;
  std::uint32_t beta_ = 0;
  std::map<std::uint64_t, Rational> table_;
  std::optional<std::uint64_t> monotone_from_;
};

/// ceil(log2 n) for n >= 1.
std::uint32_t ceil_log2(std::uint64_t n);

}  // namespace sadic
