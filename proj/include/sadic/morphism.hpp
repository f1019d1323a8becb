#pragma once

// Non-erasing morphisms between finite alphabets and directive sequences.
//
// Letters are dense 0-based indices (JSON files use 1-based letters). Images
// are stored run-length encoded: the morphisms produced by the constructions
// have images of up to millions of letters but only a handful of runs, and
// the run count of an image is exactly the block count used by r-comp.

#include "sadic/exact_linear.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sadic {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct Run {
  Letter letter = 0;
  std::uint64_t count = 0;

  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Normalized run-length word: no empty runs, adjacent runs carry different letters.
using RleWord = std::vector<Run>;

RleWord compress(std::span<const Letter> w);
Word expand(const RleWord& w);
std::uint64_t length(const RleWord& w);
/// Appends `count` copies of `letter`, merging with the last run.
void append_run(RleWord& w, Letter letter, std::uint64_t count);
void append(RleWord& w, const RleWord& tail);

class Morphism {
 public:
  Morphism() = default;
  /// Validates non-erasure and letter ranges; normalizes runs.
  Morphism(std::size_t codomain_size, std::vector<RleWord> images);

  static Morphism from_words(std::size_t codomain_size, const std::vector<Word>& images);
  static Morphism identity(std::size_t size);

  std::size_t domain_size() const { return images_.size(); }
  std::size_t codomain_size() const { return codomain_size_; }
  const RleWord& image(Letter a) const;
  Word image_word(Letter a) const { return expand(image(a)); }
  std::uint64_t image_length(Letter a) const;
  const std::vector<RleWord>& images() const { return images_; }

  Word apply(std::span<const Letter> w) const;
  RleWord apply(const RleWord& w) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::size_t codomain_size_ = 0;
  std::vector<RleWord> images_;
};

/// (sigma ∘ tau)(a) = sigma(tau(a)). Requires domain(sigma) = codomain(tau).
Morphism compose(const Morphism& sigma, const Morphism& tau);

/// Codomain × domain matrix of letter counts.
IntMatrix incidence(const Morphism& tau);

struct Norms {
  std::uint64_t min_len = 0;  // <tau>
  std::uint64_t max_len = 0;  // ||tau||
};
Norms norms(const Morphism& tau);

/// Number of maximal constant-letter blocks in tau(a).
std::uint64_t block_count(const Morphism& tau, Letter a);
/// Sum of block counts over the domain.
std::uint64_t r_comp(const Morphism& tau);

struct MorphismFlags {
  bool positive = false;
  bool left_proper = false;
  bool right_proper = false;
  bool proper = false;
  bool hat = false;
  bool letter_injective = false;
};
MorphismFlags classify(const Morphism& tau);

/// Offsets {0, |tau(w1)|, |tau(w1 w2)|, ...} of image boundaries inside tau(w).
std::vector<std::uint64_t> cutting_points(const Morphism& tau, std::span<const Letter> w);

/// A finite directive sequence tau_0, tau_1, ... with tau_i : A_{i+1}* -> A_i*.
/// With a repeat rule the stored list from index `repeat_from` on is cycled,
/// so operator[] is defined for every level.
class DirectiveSequence {
 public:
  DirectiveSequence() = default;
  explicit DirectiveSequence(std::vector<Morphism> morphisms,
                             std::optional<std::size_t> repeat_from = std::nullopt);

  std::size_t stored_depth() const { return morphisms_.size(); }
  bool periodic() const { return repeat_from_.has_value(); }
  std::optional<std::size_t> repeat_from() const { return repeat_from_; }
  const Morphism& operator[](std::size_t i) const;
  const std::vector<Morphism>& stored() const { return morphisms_; }
  /// |A_level|; level 0 is the codomain of tau_0.
  std::size_t alphabet_size(std::size_t level) const;
  /// Finite sequence tau_0 .. tau_{depth-1} (expanding a repeat rule).
  DirectiveSequence truncated(std::size_t depth) const;
  /// Number of levels that may be requested (unbounded when periodic).
  std::size_t available_depth() const;

 private:
  std::vector<Morphism> morphisms_;
  std::optional<std::size_t> repeat_from_;
};

/// Lengths |tau_[0,k)(a)| for a in A_k, cached level by level.
class LengthTable {
 public:
  explicit LengthTable(const DirectiveSequence& ds) : ds_(&ds) {}
  const std::vector<BigInt>& lengths(std::size_t k);
  BigInt min_length(std::size_t k);  // <tau_[0,k)>
  BigInt max_length(std::size_t k);  // ||tau_[0,k)||

 private:
  const DirectiveSequence* ds_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace sadic
