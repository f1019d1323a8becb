#include "sadic/morphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sadic {

void append_run(RleWord& w, Letter letter, std::uint64_t count) {
  if (count == 0) return;
  if (!w.empty() && w.back().letter == letter) {
    w.back().count += count;
  } else {
    w.push_back({letter, count});
  }
}

void append(RleWord& w, const RleWord& tail) {
  for (const Run& r : tail) append_run(w, r.letter, r.count);
}

RleWord compress(std::span<const Letter> w) {
  RleWord out;
  for (Letter c : w) append_run(out, c, 1);
  return out;
}

Word expand(const RleWord& w) {
  Word out;
  out.reserve(length(w));
  for (const Run& r : w) out.insert(out.end(), r.count, r.letter);
  return out;
}

std::uint64_t length(const RleWord& w) {
  std::uint64_t n = 0;
  for (const Run& r : w) n += r.count;
  return n;
}

Morphism::Morphism(std::size_t codomain_size, std::vector<RleWord> images)
    : codomain_size_(codomain_size) {
  images_.reserve(images.size());
  for (std::size_t a = 0; a < images.size(); ++a) {
    RleWord norm;
    for (const Run& r : images[a]) {
      if (r.letter >= codomain_size) {
        throw std::invalid_argument("morphism image of letter " + std::to_string(a + 1) +
                                    " uses letter " + std::to_string(r.letter + 1) +
                                    " outside a codomain of size " + std::to_string(codomain_size));
      }
      append_run(norm, r.letter, r.count);
    }
    if (norm.empty()) {
      throw std::invalid_argument("morphism is erasing: image of letter " + std::to_string(a + 1) +
                                  " is empty");
    }
    images_.push_back(std::move(norm));
  }
}

Morphism Morphism::from_words(std::size_t codomain_size, const std::vector<Word>& images) {
  std::vector<RleWord> rle;
  rle.reserve(images.size());
  for (const Word& w : images) rle.push_back(compress(w));
  return Morphism(codomain_size, std::move(rle));
}

Morphism Morphism::identity(std::size_t size) {
  std::vector<RleWord> images(size);
  for (std::size_t a = 0; a < size; ++a) images[a] = {{static_cast<Letter>(a), 1}};
  return Morphism(size, std::move(images));
}

const RleWord& Morphism::image(Letter a) const {
  if (a >= images_.size()) {
    throw std::out_of_range("letter " + std::to_string(a + 1) + " outside a domain of size " +
                            std::to_string(images_.size()));
  }
  return images_[a];
}

std::uint64_t Morphism::image_length(Letter a) const { return length(image(a)); }

Word Morphism::apply(std::span<const Letter> w) const {
  Word out;
  for (Letter a : w) {
    for (const Run& r : image(a)) out.insert(out.end(), r.count, r.letter);
  }
  return out;
}

RleWord Morphism::apply(const RleWord& w) const {
  RleWord out;
  for (const Run& run : w) {
    const RleWord& img = image(run.letter);
    if (img.size() == 1) {
      append_run(out, img.front().letter, img.front().count * run.count);
      continue;
    }
    for (std::uint64_t k = 0; k < run.count; ++k) append(out, img);
  }
  return out;
}

Morphism compose(const Morphism& sigma, const Morphism& tau) {
  if (sigma.domain_size() != tau.codomain_size()) {
    throw std::invalid_argument("compose: domain of sigma has " +
                                std::to_string(sigma.domain_size()) +
                                " letters but tau maps into " +
                                std::to_string(tau.codomain_size()));
  }
  std::vector<RleWord> images;
  images.reserve(tau.domain_size());
  for (const RleWord& img : tau.images()) images.push_back(sigma.apply(img));
  return Morphism(sigma.codomain_size(), std::move(images));
}

IntMatrix incidence(const Morphism& tau) {
  IntMatrix m = IntMatrix::Constant(static_cast<Eigen::Index>(tau.codomain_size()),
                                    static_cast<Eigen::Index>(tau.domain_size()), BigInt(0));
  for (std::size_t a = 0; a < tau.domain_size(); ++a) {
    for (const Run& r : tau.images()[a]) {
      m(r.letter, static_cast<Eigen::Index>(a)) += r.count;
    }
  }
  return m;
}

Norms norms(const Morphism& tau) {
  Norms n{tau.image_length(0), tau.image_length(0)};
  for (std::size_t a = 1; a < tau.domain_size(); ++a) {
    const std::uint64_t len = tau.image_length(static_cast<Letter>(a));
    n.min_len = std::min(n.min_len, len);
    n.max_len = std::max(n.max_len, len);
  }
  return n;
}

std::uint64_t block_count(const Morphism& tau, Letter a) { return tau.image(a).size(); }

std::uint64_t r_comp(const Morphism& tau) {
  std::uint64_t total = 0;
  for (const RleWord& img : tau.images()) total += img.size();
  return total;
}

MorphismFlags classify(const Morphism& tau) {
  MorphismFlags f;
  f.positive = is_positive(incidence(tau));

  const auto& imgs = tau.images();
  const Letter first = imgs.front().front().letter;
  const Letter last = imgs.front().back().letter;
  f.left_proper = std::all_of(imgs.begin(), imgs.end(),
                              [&](const RleWord& w) { return w.front().letter == first; });
  f.right_proper = std::all_of(imgs.begin(), imgs.end(),
                               [&](const RleWord& w) { return w.back().letter == last; });
  f.proper = f.left_proper && f.right_proper;

  // Every codomain letter occurs at most once across all images.
  std::vector<std::uint64_t> seen(tau.codomain_size(), 0);
  f.hat = true;
  for (const RleWord& w : imgs) {
    for (const Run& r : w) {
      seen[r.letter] += r.count;
      if (seen[r.letter] > 1) f.hat = false;
    }
  }

  const std::set<RleWord> distinct(imgs.begin(), imgs.end());
  f.letter_injective = distinct.size() == imgs.size();
  return f;
}

std::vector<std::uint64_t> cutting_points(const Morphism& tau, std::span<const Letter> w) {
  std::vector<std::uint64_t> cuts{0};
  std::uint64_t pos = 0;
  for (Letter a : w) {
    pos += tau.image_length(a);
    cuts.push_back(pos);
  }
  return cuts;
}

DirectiveSequence::DirectiveSequence(std::vector<Morphism> morphisms,
                                     std::optional<std::size_t> repeat_from)
    : morphisms_(std::move(morphisms)), repeat_from_(repeat_from) {
  if (morphisms_.empty()) throw std::invalid_argument("directive sequence is empty");
  for (std::size_t i = 0; i + 1 < morphisms_.size(); ++i) {
    if (morphisms_[i].domain_size() != morphisms_[i + 1].codomain_size()) {
      throw std::invalid_argument("directive sequence: tau_" + std::to_string(i) + " has domain " +
                                  std::to_string(morphisms_[i].domain_size()) + " but tau_" +
                                  std::to_string(i + 1) + " maps into " +
                                  std::to_string(morphisms_[i + 1].codomain_size()));
    }
  }
  if (repeat_from_) {
    if (*repeat_from_ >= morphisms_.size()) {
      throw std::invalid_argument("directive sequence: repeat index out of range");
    }
    if (morphisms_.back().domain_size() != morphisms_[*repeat_from_].codomain_size()) {
      throw std::invalid_argument("directive sequence: repeated block does not chain");
    }
  }
}

const Morphism& DirectiveSequence::operator[](std::size_t i) const {
  if (i < morphisms_.size()) return morphisms_[i];
  if (!repeat_from_) {
    throw std::out_of_range("directive sequence has only " + std::to_string(morphisms_.size()) +
                            " levels (requested tau_" + std::to_string(i) + ")");
  }
  const std::size_t cycle = morphisms_.size() - *repeat_from_;
  return morphisms_[*repeat_from_ + (i - *repeat_from_) % cycle];
}

std::size_t DirectiveSequence::alphabet_size(std::size_t level) const {
  if (level == 0) return (*this)[0].codomain_size();
  return (*this)[level - 1].domain_size();
}

DirectiveSequence DirectiveSequence::truncated(std::size_t depth) const {
  std::vector<Morphism> out;
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) out.push_back((*this)[i]);
  return DirectiveSequence(std::move(out));
}

std::size_t DirectiveSequence::available_depth() const {
  return repeat_from_ ? static_cast<std::size_t>(-1) : morphisms_.size();
}

const std::vector<BigInt>& LengthTable::lengths(std::size_t k) {
  if (rows_.empty()) rows_.push_back(std::vector<BigInt>(ds_->alphabet_size(0), BigInt(1)));
  while (rows_.size() <= k) {
    const std::size_t level = rows_.size() - 1;
    const Morphism& tau = (*ds_)[level];
    const std::vector<BigInt>& prev = rows_.back();
    std::vector<BigInt> next(tau.domain_size(), BigInt(0));
    for (std::size_t a = 0; a < tau.domain_size(); ++a) {
      for (const Run& r : tau.images()[a]) next[a] += prev[r.letter] * r.count;
    }
    rows_.push_back(std::move(next));
  }
  return rows_[k];
}

BigInt LengthTable::min_length(std::size_t k) {
  const auto& row = lengths(k);
  return *std::min_element(row.begin(), row.end());
}

BigInt LengthTable::max_length(std::size_t k) {
  const auto& row = lengths(k);
  return *std::max_element(row.begin(), row.end());
}

}  // namespace sadic
