#pragma once

// Edge orders on Bratteli diagrams and the morphisms read on them.

#include "sadic/bratteli.hpp"
#include "sadic/morphism.hpp"

#include <cstdint>
#include <vector>

namespace sadic {

/// tau(v_j) = u_1^j u_2^{A(j,2)} u_1^{A(j,1)-j} u_3^{A(j,3)} ... u_m^{A(j,m)}.
/// A is m_{i+1} x m_i with positive entries, m_i >= 2 and A(j,1) > m_{i+1}.
/// The letter counts satisfy incidence(tau) = A^t.
Morphism order_lemma_injective(const IntMatrix& a);

/// Level-0 morphism v_j -> e_{s+1} ... e_{s+A_0(j,1)} enumerating the edges of
/// E_1 vertex by vertex.
Morphism hat_morphism(const IntMatrix& a0);

/// The directive sequence read on an ordered diagram.
DirectiveSequence read_morphisms(const BratteliDiagram& d);

/// Orders every level i >= 1 with order_lemma_injective and level 0 with
/// hat_morphism.
BratteliDiagram with_injective_order(const BratteliDiagram& d);

struct MarkerReport {
  bool holds = false;
  std::size_t interior_occurrences = 0;  // u_m u_1 inside one image
  std::size_t junctions_without_marker = 0;  // ordered image pairs not joined by u_m u_1
};

struct DecodingReport {
  std::size_t words_checked = 0;
  std::size_t ambiguous = 0;
  bool unique = false;
  std::vector<Word> counterexamples;  // first few ambiguous words
};

struct RecognizabilityReport {
  std::size_t alphabet_size = 0;  // m_i, the codomain size
  MarkerReport marker;
  DecodingReport decoding;
};

/// All words of length 1..max_len over the domain, then `random_count` random
/// words of length `random_len` drawn from a seeded generator.
std::vector<Word> sample_words(std::size_t domain_size, std::size_t max_len,
                               std::size_t random_count, std::size_t random_len,
                               std::uint64_t seed);

/// Number of factorizations of tau(w) into images of letters, saturated at 2.
int count_factorizations(const Morphism& tau, const Word& w);

MarkerReport check_marker(const Morphism& tau);

RecognizabilityReport verify_recognizability(const Morphism& tau, const std::vector<Word>& words);

}  // namespace sadic
