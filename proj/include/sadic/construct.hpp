#pragma once

// The two constructions: the splitting/adapted-matrix pipeline for simple
// diagrams and the equal-row-sum pipeline for divisible groups, plus their
// self-verification.
//
// Level indices are 0-based array indices and agree with the subscripts used
// in the construction (A_i, h_i, k_i, J_i, ...). Input levels consumed by
// telescoping are reported as `cuts` on the input diagram.

#include "sadic/bratteli.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"
#include "sadic/ordering.hpp"
#include "sadic/target.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sadic {

/// Raised when no threshold t satisfies the growth inequality within the scan.
class ThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest t* <= scan_limit with i * m^3 * t < p_t for every t in
/// [t*, scan_limit] where the target is defined.
std::uint64_t threshold(const ComplexityTarget& target, std::uint64_t m, std::uint64_t i,
                        std::uint64_t scan_limit);

struct Diagnostic {
  std::size_t level = 0;
  std::string condition;
  std::string value;
  bool pass = false;
  bool gating = true;  // advisory entries never fail a result
};

enum class Mode { Main1, Toeplitz };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ConstructionOptions {
  std::uint64_t scan_limit = 100000;
  /// Input levels available to telescoping.
  std::size_t horizon = 512;
  /// Extra windows tried past the shortest one before moving to h+1.
  std::size_t window_slack = 8;
};

struct ConstructionResult {
  Mode mode = Mode::Main1;
  std::string target;
  std::size_t depth = 0;
  bool failed = false;
  std::string failure;

  BratteliDiagram input;
  std::vector<std::size_t> cuts;  // telescoping cuts on the input levels

  // a: telescoped input matrices A_i. split_b / split_c: A_i = B_i C_i
  // (main1: B(A_i,h_i), C(A_i,h_i); toeplitz: the presplit factors).
  // a_prime: A'_i = C_i B_{i-1}, A'_0 = C_0. j: J_0 .. J_depth.
  // final: J_{i+1} A'_i J_i^{-1} (main1: A''_i; toeplitz: B_i).
  std::vector<IntMatrix> a;
  std::vector<IntMatrix> split_b;
  std::vector<IntMatrix> split_c;
  std::vector<IntMatrix> a_prime;
  std::vector<RatMatrix> j;
  std::vector<IntMatrix> final;

  // Per-level scalars keyed by level: main1 uses h and t; toeplitz uses
  // k, s, ell and t.
  std::map<std::size_t, BigInt> h, t, k, s, ell;

  BratteliDiagram final_diagram;  // ordered
  DirectiveSequence sequence;
  std::vector<Diagnostic> diagnostics;
  bool divisible_asserted = false;

  /// First gating diagnostic that failed, if any.
  const Diagnostic* first_violation() const;
};

ConstructionResult build_main1(const BratteliDiagram& d, const ComplexityTarget& target,
                               std::size_t depth, const ConstructionOptions& opts = {});

struct PresplitResult {
  std::vector<IntMatrix> tilde;  // Ã_i
  std::vector<IntMatrix> b;
  std::vector<IntMatrix> c;
  bool unchanged = false;
};

/// Ã_0 = C_0 = (1,1)^t, Ã_i = C_i B_{i-1}; singleton levels are split with
/// a balanced row split. Sequences with m_1 = 2 and A_0 = (1,1)^t come back
/// unchanged (B_i = I, C_i = A_i).
PresplitResult presplit_divisible(const std::vector<IntMatrix>& a_seq);

ConstructionResult build_toeplitz(const BratteliDiagram& d, const ComplexityTarget& target,
                                  std::size_t depth, const ConstructionOptions& opts = {});

/// A named check inside a verification report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool gating = true;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t toeplitz_window = 10000;
  std::size_t exhaustive_word_length = 4;
  std::size_t random_words = 16;
  std::size_t random_word_length = 8;
};

struct VerificationReport {
  bool skipped = false;
  bool pass = false;
  std::vector<Check> checks;

  ComplexityProfile profile;
  std::vector<std::optional<BoundValue>> bounds;  // index n-1
  std::vector<long double> ratio;                 // p(n)/p_n, index n-1
  std::vector<long double> decade_max;            // decade d covers [10^d, 10^(d+1))
  bool decades_decreasing = false;
  BoshernitzanBound boshernitzan;

  std::optional<AdaptedReport> adapted;
  std::optional<ToeplitzReport> toeplitz;
  std::vector<std::uint64_t> toeplitz_candidates;
  std::vector<RecognizabilityReport> recognizability;  // level i >= 1 at index i-1

  const Check* find(const std::string& name) const;
};

VerificationReport verify_construction(const ConstructionResult& res, const ComplexityTarget& target,
                                       std::uint64_t n_max, const VerifyOptions& opts = {});

/// Depth the verification at horizon N needs: j0 + 3 with j0 the first level
/// whose shortest image reaches N. Empty when the stored levels never reach N.
std::optional<std::size_t> verification_depth(const DirectiveSequence& ds, std::uint64_t n_max);

/// J_i = S_i D_i for a level with 2m vertices, odd diagonal entries h.
RatMatrix adapted_j(std::size_t m, const BigInt& h);

}  // namespace sadic
