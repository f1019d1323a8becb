#pragma once

// Bratteli diagrams given by their incidence matrices.
//
// A_i has shape |V_{i+1}| x |V_i| and |V_0| = 1. An infinite diagram is kept
// as a finite list plus a repeat rule: from index `repeat_from` on, the
// stored matrices are cycled.

#include "sadic/exact_linear.hpp"
#include "sadic/morphism.hpp"

#include <optional>
#include <vector>

namespace sadic {

class BratteliDiagram {
 public:
  BratteliDiagram() = default;
  /// Checks shapes, nonnegativity and the no-sink/no-source condition.
  explicit BratteliDiagram(std::vector<IntMatrix> incidences,
                           std::optional<std::size_t> repeat_from = std::nullopt);

  /// Number of stored incidence matrices.
  std::size_t depth() const { return incidences_.size(); }
  bool periodic() const { return repeat_from_.has_value(); }
  std::optional<std::size_t> repeat_from() const { return repeat_from_; }
  const std::vector<IntMatrix>& incidences() const { return incidences_; }
  /// A_i, following the repeat rule past the stored list.
  const IntMatrix& matrix(std::size_t i) const;
  /// |V_level|.
  std::size_t level_size(std::size_t level) const;
  std::vector<std::size_t> level_sizes() const;
  /// The first `depth` matrices as a plain finite diagram.
  BratteliDiagram expanded(std::size_t depth) const;

  /// Per-level edge order, stored as the morphisms read on the ordered
  /// diagram: order()[0] is the hat morphism on E_1, order()[i] : V_{i+1} -> V_i.
  const std::optional<std::vector<Morphism>>& order() const { return order_; }
  void set_order(std::vector<Morphism> order);

 private:
  std::vector<IntMatrix> incidences_;
  std::optional<std::size_t> repeat_from_;
  std::optional<std::vector<Morphism>> order_;
};

/// Products of the matrices between consecutive cuts; order data is dropped.
BratteliDiagram telescope(const BratteliDiagram& d, const std::vector<std::size_t>& cuts);

/// A_{end-1} ... A_begin (the identity of size |V_begin| when begin == end).
IntMatrix product(const BratteliDiagram& d, std::size_t begin, std::size_t end);

struct SplitResult {
  IntMatrix b;
  IntMatrix c;
  IntMatrix q;
  IntMatrix r;
  BigInt d;
};

/// A = dQ + R with B = [dQ_1 R_1 dQ_2 R_2 ...] and C_{.,i} = e_{2i-1} + e_{2i}.
SplitResult split_level(const IntMatrix& a, const BigInt& d);

/// Number of root paths to every vertex of `level`.
IntVector path_counts(const BratteliDiagram& d, std::size_t level);

struct SimpleWitness {
  bool flag = false;
  std::size_t begin = 0;  // window [begin, end) of matrix indices
  std::size_t end = 0;
};

/// Shortest window [1, end) of stored matrices with a positive product.
/// Telescoping at such windows is what
/// makes every incidence matrix positive.
SimpleWitness check_simple(const BratteliDiagram& d);

struct AdaptedLevel {
  std::size_t level = 0;
  bool j_positive = false;
  bool j_inverse_positive = false;
  /// Smallest M >= level with A_M ... A_level J_level^{-1} integral and
  /// nonnegative, if one exists within the horizon.
  std::optional<std::size_t> m_found;
  bool m_product_positive = false;
  RatMatrix b;  // J_{i+1} A_i J_i^{-1}
  bool b_integral = false;
  bool b_nonnegative = false;
  bool b_positive = false;
};

struct AdaptedReport {
  std::vector<AdaptedLevel> levels;
  /// Every M search succeeded and every B_i is a nonnegative integer matrix.
  bool integral = false;
  /// Additionally every J_i, J_i^{-1}, B_i and M-product is strictly positive.
  bool strict = false;
};

/// Checks the adapted-sequence conditions for i < horizon. Needs J_0 .. J_horizon.
AdaptedReport verify_adapted(const std::vector<IntMatrix>& a_seq,
                             const std::vector<RatMatrix>& j_seq, std::size_t horizon);

}  // namespace sadic
