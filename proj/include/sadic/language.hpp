#pragma once

// Languages of directive sequences: generated words, factor sets, factor
// complexity, the upper bounds read off the morphisms, Toeplitz windows and
// the Boshernitzan measure bound.

#include "sadic/morphism.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sadic {

struct GeneratedWord {
  Word word;
  std::size_t depth = 0;  // k with word a prefix of tau_[level,k)(a)
  /// Every tau_j with level < j < depth is left proper.
  bool left_proper_tail = false;
  /// Every b in A_k long enough gives the same prefix as a.
  bool prefix_independent = false;
};

/// Prefix of length L of tau_[level,k)(a) for the smallest k > level at which
/// a is a letter of A_k and the image is long enough.
GeneratedWord generate_word(const DirectiveSequence& ds, std::size_t level, Letter a,
                            std::uint64_t length);

struct FactorSet {
  std::size_t length = 0;
  std::vector<Word> words;  // sorted
  std::size_t level_used = 0;
  bool stabilized = false;
};

/// Length-ell factors of the level-0 language by direct enumeration of the
/// words tau_[0,k)(a): k grows until the accumulated sets at k-1 and k agree
/// and <tau_[0,k-1)> >= 2*ell. Stops with stabilized = false once the next
/// level would exceed max_letters letters or the sequence ends.
FactorSet factors(const DirectiveSequence& ds, std::size_t ell,
                  std::uint64_t max_letters = std::uint64_t{1} << 26);

struct ComplexityProfile {
  std::vector<std::uint64_t> p;  // p[n-1] = p(n)
  std::size_t alphabet_size = 0;
  std::size_t level_used = 0;      // j0: <tau_[0,j0)> >= N
  std::size_t stabilized_at = 0;   // depth k with equal pair sets at k-1 and k
  bool stabilized = false;
  std::uint64_t text_length = 0;

  std::uint64_t at(std::uint64_t n) const { return p.at(n - 1); }
  std::uint64_t horizon() const { return p.size(); }
};

/// p(n) for 1 <= n <= N. The words of length <= N are read off the level-j0
/// two-letter language, with long runs capped so the text stays small, and
/// counted with a suffix array.
ComplexityProfile complexity_profile(const DirectiveSequence& ds, std::uint64_t n_max);

/// Brute-force p(n) = number of distinct length-n slices of the given words.
std::uint64_t count_distinct_slices(const std::vector<Word>& words, std::size_t n);

enum class Regime { I, J };

struct BoundValue {
  BigInt bound;
  Regime regime = Regime::I;
  std::size_t level = 0;          // i(n)
  std::optional<BigInt> coarse;   // 3|A_{i+2}|^3 n on I, 5|A_{i+3}|^3 n on J
};

/// Evaluates the morphism-based upper bound on p(n) for many n.
class BoundEvaluator {
 public:
  explicit BoundEvaluator(const DirectiveSequence& ds);
  BoundValue at(std::uint64_t n);
  /// ||tau_[0,i)|| and <tau_[0,i)>.
  BigInt max_len(std::size_t i);
  BigInt min_len(std::size_t i);

 private:
  const DirectiveSequence* ds_;
  LengthTable lengths_;
};

BoundValue complexity_bound(const DirectiveSequence& ds, std::uint64_t n);

enum class PositionStatus { Verified, Open, Refuted };

struct ToeplitzReport {
  std::size_t window = 0;
  std::vector<PositionStatus> status;
  std::vector<std::uint64_t> period;  // 0 unless verified
  std::size_t verified = 0;
  std::size_t open = 0;
  std::size_t refuted = 0;
  bool flag = false;  // no refuted position
};

/// For each position p the smallest candidate q such that the two-sided
/// progression p + kq inside the window has at least two points, all equal.
/// A position is open when no candidate verifies it but some candidate's
/// progression has a single point, refuted when every candidate was testable
/// and failed.
ToeplitzReport toeplitz_check(std::span<const Letter> w, std::vector<std::uint64_t> candidates);

struct BoshernitzanBound {
  Rational alpha_estimate;
  BigInt measure_bound;
  std::uint64_t argmin = 0;
};

/// alpha = min_n p(n)/n + 1/N; bound = max(greatest integer < alpha, 1).
BoshernitzanBound boshernitzan_bound(const std::vector<std::uint64_t>& p);
BoshernitzanBound boshernitzan_bound(const ComplexityProfile& profile);

}  // namespace sadic
