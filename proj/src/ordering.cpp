#include "sadic/ordering.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace sadic {

namespace {

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

struct Pos {
  std::size_t run = 0;
  std::uint64_t off = 0;
  bool operator<(const Pos& o) const { return run != o.run ? run < o.run : off < o.off; }
};

// Matches img at p inside text; returns the end position.
std::optional<Pos> match(const RleWord& img, const RleWord& text, Pos p) {
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (p.run >= text.size()) return std::nullopt;
    const Run& t = text[p.run];
    if (t.letter != img[k].letter) return std::nullopt;
    const std::uint64_t avail = t.count - p.off;
    if (k + 1 == img.size()) {
      if (img[k].count > avail) return std::nullopt;
      p.off += img[k].count;
      if (p.off == t.count) {
        ++p.run;
        p.off = 0;
      }
      return p;
    }
    // The next image run has another letter, so this text run must end here.
    if (img[k].count != avail) return std::nullopt;
    ++p.run;
    p.off = 0;
  }
  return p;
}

}  // namespace

Morphism order_lemma_injective(const IntMatrix& a) {
  const Eigen::Index rows = a.rows();  // m_{i+1}
  const Eigen::Index cols = a.cols();  // m_i
  if (cols < 2) throw std::invalid_argument("order_lemma_injective: needs m_i >= 2, got " + std::to_string(cols));
  if (!is_positive(a)) throw std::invalid_argument("order_lemma_injective: matrix must be positive");
  for (Eigen::Index j = 0; j < rows; ++j) {
    if (a(j, 0) <= rows) {
      throw std::invalid_argument("order_lemma_injective: A(" + std::to_string(j + 1) + ",1) = " +
                                  to_string(a(j, 0)) + " is not > m_{i+1} = " + std::to_string(rows));
    }
  }
  std::vector<RleWord> images;
  for (Eigen::Index j = 0; j < rows; ++j) {
    const std::uint64_t first = static_cast<std::uint64_t>(j + 1);
    RleWord w;
    append_run(w, 0, first);
    append_run(w, 1, to_u64(a(j, 1), "incidence entry"));
    append_run(w, 0, to_u64(a(j, 0), "incidence entry") - first);
    for (Eigen::Index k = 2; k < cols; ++k) {
      append_run(w, static_cast<Letter>(k), to_u64(a(j, k), "incidence entry"));
    }
    images.push_back(std::move(w));
  }
  return Morphism(static_cast<std::size_t>(cols), std::move(images));
}

Morphism hat_morphism(const IntMatrix& a0) {
  if (a0.cols() != 1) throw DimensionMismatch("hat_morphism: A_0 must have one column");
  std::vector<Word> images;
  Letter next = 0;
  for (Eigen::Index j = 0; j < a0.rows(); ++j) {
    const std::uint64_t count = to_u64(a0(j, 0), "edge count");
    if (count == 0) throw std::invalid_argument("hat_morphism: vertex without edges");
    Word w;
    for (std::uint64_t e = 0; e < count; ++e) w.push_back(next++);
    images.push_back(std::move(w));
  }
  return Morphism::from_words(next, images);
}

DirectiveSequence read_morphisms(const BratteliDiagram& d) {
  if (!d.order()) throw std::invalid_argument("read_morphisms: diagram carries no order");
  std::vector<Morphism> out = *d.order();
  const MorphismFlags f = classify(out[0]);
  if (!f.hat) throw std::invalid_argument("read_morphisms: level-0 morphism is not a hat morphism");
  return DirectiveSequence(std::move(out));
}

BratteliDiagram with_injective_order(const BratteliDiagram& d) {
  std::vector<Morphism> order;
  order.push_back(hat_morphism(d.matrix(0)));
  for (std::size_t i = 1; i < d.depth(); ++i) order.push_back(order_lemma_injective(d.matrix(i)));
  BratteliDiagram out = d;
  out.set_order(std::move(order));
  return out;
}

std::vector<Word> sample_words(std::size_t domain_size, std::size_t max_len,
                               std::size_t random_count, std::size_t random_len,
                               std::uint64_t seed) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t a = 0; a < domain_size; ++a) {
        Word v = w;
        v.push_back(static_cast<Letter>(a));
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, domain_size - 1);
  for (std::size_t r = 0; r < random_count; ++r) {
    Word w(random_len);
    for (Letter& c : w) c = static_cast<Letter>(pick(rng));
    out.push_back(std::move(w));
  }
  return out;
}

int count_factorizations(const Morphism& tau, const Word& w) {
  const RleWord text = tau.apply(compress(w));
  std::map<Pos, int> frontier;
  frontier[Pos{}] = 1;
  while (!frontier.empty()) {
    auto it = frontier.begin();
    const Pos p = it->first;
    const int ways = it->second;
    frontier.erase(it);
    if (p.run == text.size()) return ways;
    for (const RleWord& img : tau.images()) {
      if (auto q = match(img, text, p)) {
        int& slot = frontier[*q];
        slot = std::min(2, slot + ways);
      }
    }
  }
  return 0;
}

MarkerReport check_marker(const Morphism& tau) {
  MarkerReport rep;
  const Letter last = static_cast<Letter>(tau.codomain_size() - 1);
  const Letter first = 0;
  for (const RleWord& img : tau.images()) {
    for (std::size_t k = 0; k + 1 < img.size(); ++k) {
      if (img[k].letter == last && img[k + 1].letter == first) ++rep.interior_occurrences;
    }
  }
  for (const RleWord& x : tau.images()) {
    for (const RleWord& y : tau.images()) {
      if (!(x.back().letter == last && y.front().letter == first)) ++rep.junctions_without_marker;
    }
  }
  rep.holds = tau.codomain_size() >= 2 && rep.interior_occurrences == 0 &&
              rep.junctions_without_marker == 0;
  return rep;
}

RecognizabilityReport verify_recognizability(const Morphism& tau, const std::vector<Word>& words) {
  RecognizabilityReport rep;
  rep.alphabet_size = tau.codomain_size();
  rep.marker = check_marker(tau);
  for (const Word& w : words) {
    ++rep.decoding.words_checked;
    if (count_factorizations(tau, w) != 1) {
      ++rep.decoding.ambiguous;
      if (rep.decoding.counterexamples.size() < 5) rep.decoding.counterexamples.push_back(w);
    }
  }
  rep.decoding.unique = rep.decoding.ambiguous == 0;
  return rep;
}

}  // namespace sadic
