#include "sadic/language.hpp"

#include "sadic/suffix_array.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace sadic {

namespace {

// Bound on levels visited for periodic sequences.
constexpr std::size_t kPeriodicLimit = 4096;

bool available(const DirectiveSequence& ds, std::size_t k) {
  return ds.periodic() || k <= ds.stored_depth();
}

using Pair = std::pair<Letter, Letter>;

// Letters and two-letter factors at level j0 of the words tau_[j0,k)(a), a in A_k.
void pairs_from_depth(const DirectiveSequence& ds, std::size_t j0, std::size_t k,
                      std::set<Letter>& letters_out, std::set<Pair>& pairs_out) {
  std::set<Letter> letters;
  for (std::size_t a = 0; a < ds.alphabet_size(k); ++a) letters.insert(static_cast<Letter>(a));
  std::set<Pair> pairs;
  for (std::size_t j = k; j-- > j0;) {
    const Morphism& t = ds[j];
    std::set<Letter> nl;
    std::set<Pair> np;
    for (Letter a : letters) {
      const RleWord& img = t.image(a);
      for (std::size_t r = 0; r < img.size(); ++r) {
        nl.insert(img[r].letter);
        if (img[r].count >= 2) np.insert({img[r].letter, img[r].letter});
        if (r + 1 < img.size()) np.insert({img[r].letter, img[r + 1].letter});
      }
    }
    for (const Pair& bc : pairs) np.insert({t.image(bc.first).back().letter, t.image(bc.second).front().letter});
    letters = std::move(nl);
    pairs = std::move(np);
  }
  letters_out.insert(letters.begin(), letters.end());
  pairs_out.insert(pairs.begin(), pairs.end());
}

std::uint64_t run_cap(const BigInt& block_len, std::uint64_t n_max) {
  // Copies of a block of length L needed to keep every factor of length <= N.
  if (block_len > n_max) return 2;
  const std::uint64_t l = block_len.convert_to<std::uint64_t>();
  return (n_max + l - 1) / l + 1;
}

}  // namespace

GeneratedWord generate_word(const DirectiveSequence& ds, std::size_t level, Letter a,
                            std::uint64_t length) {
  GeneratedWord out;
  std::vector<BigInt> len(ds.alphabet_size(level), BigInt(1));
  const std::size_t limit = ds.periodic() ? level + kPeriodicLimit : ds.stored_depth();
  std::size_t k = level + 1;
  bool found = false;
  for (; k <= limit; ++k) {
    const Morphism& t = ds[k - 1];
    std::vector<BigInt> next(t.domain_size(), BigInt(0));
    for (std::size_t b = 0; b < t.domain_size(); ++b) {
      for (const Run& r : t.images()[b]) next[b] += len[r.letter] * r.count;
    }
    len = std::move(next);
    if (a < len.size() && len[a] >= length) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::runtime_error("generate_word: no stored level gives a word of length " +
                             std::to_string(length) + " from letter " + std::to_string(a + 1));
  }
  out.depth = k;

  auto prefix_of = [&](Letter start) {
    Word w;
    w.reserve(length);
    std::function<void(std::size_t, Letter)> emit = [&](std::size_t j, Letter u) {
      if (w.size() >= length) return;
      if (j == level) {
        w.push_back(u);
        return;
      }
      for (const Run& r : ds[j - 1].image(u)) {
        for (std::uint64_t c = 0; c < r.count; ++c) {
          if (w.size() >= length) return;
          emit(j - 1, r.letter);
        }
      }
    };
    emit(k, start);
    return w;
  };

  out.word = prefix_of(a);
  out.left_proper_tail = true;
  for (std::size_t j = level + 1; j < k; ++j) {
    if (!classify(ds[j]).left_proper) out.left_proper_tail = false;
  }
  out.prefix_independent = true;
  for (std::size_t b = 0; b < len.size(); ++b) {
    if (b == a || len[b] < length) continue;
    if (prefix_of(static_cast<Letter>(b)) != out.word) out.prefix_independent = false;
  }
  return out;
}

FactorSet factors(const DirectiveSequence& ds, std::size_t ell, std::uint64_t max_letters) {
  FactorSet out;
  out.length = ell;
  std::set<Word> acc;
  std::size_t prev_size = 0;
  bool first = true;
  Morphism comp = Morphism::identity(ds.alphabet_size(0));
  LengthTable lt(ds);
  const std::size_t limit = ds.periodic() ? kPeriodicLimit : ds.stored_depth();
  for (std::size_t k = 1; k <= limit; ++k) {
    BigInt total = 0;
    for (const BigInt& l : lt.lengths(k)) total += l;
    if (total > max_letters) break;
    comp = compose(comp, ds[k - 1]);
    for (const RleWord& img : comp.images()) {
      const Word w = expand(img);
      for (std::size_t s = 0; s + ell <= w.size(); ++s) acc.emplace(w.begin() + s, w.begin() + s + ell);
    }
    out.level_used = k;
    // Both compared levels must already be long enough.
    if (!first && acc.size() == prev_size && lt.min_length(k - 1) >= 2 * ell) {
      out.stabilized = true;
      break;
    }
    first = false;
    prev_size = acc.size();
  }
  out.words.assign(acc.begin(), acc.end());
  return out;
}

std::uint64_t count_distinct_slices(const std::vector<Word>& words, std::size_t n) {
  std::set<Word> seen;
  for (const Word& w : words) {
    for (std::size_t s = 0; s + n <= w.size(); ++s) seen.emplace(w.begin() + s, w.begin() + s + n);
  }
  return seen.size();
}

ComplexityProfile complexity_profile(const DirectiveSequence& ds, std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("complexity_profile: N must be >= 1");
  ComplexityProfile prof;
  prof.alphabet_size = ds.alphabet_size(0);
  LengthTable lt(ds);

  std::size_t j0 = 0;
  while (lt.min_length(j0) < n_max) {
    ++j0;
    if (!available(ds, j0) || j0 > kPeriodicLimit) {
      throw std::runtime_error("complexity_profile: insufficient depth, <tau_[0,k)> < N=" +
                               std::to_string(n_max) + " for every stored k");
    }
  }
  prof.level_used = j0;

  std::set<Letter> letters;
  std::set<Pair> pairs;
  const std::size_t limit = ds.periodic() ? j0 + kPeriodicLimit : ds.stored_depth();
  if (j0 == limit) {
    for (std::size_t a = 0; a < ds.alphabet_size(j0); ++a) letters.insert(static_cast<Letter>(a));
  }
  for (std::size_t k = j0 + 1; k <= limit; ++k) {
    const std::size_t before_l = letters.size();
    const std::size_t before_p = pairs.size();
    pairs_from_depth(ds, j0, k, letters, pairs);
    prof.stabilized_at = k;
    if (k >= j0 + 2 && letters.size() == before_l && pairs.size() == before_p) {
      prof.stabilized = true;
      break;
    }
  }

  std::vector<std::vector<BigInt>> lens;
  for (std::size_t j = 0; j <= j0; ++j) lens.push_back(lt.lengths(j));

  std::vector<std::map<Letter, Word>> memo(j0 + 1);
  std::function<const Word&(std::size_t, Letter)> capped = [&](std::size_t j, Letter u) -> const Word& {
    auto it = memo[j].find(u);
    if (it != memo[j].end()) return it->second;
    Word w;
    if (j == 0) {
      w.push_back(u);
    } else {
      for (const Run& r : ds[j - 1].image(u)) {
        const std::uint64_t copies = std::min<std::uint64_t>(r.count, run_cap(lens[j - 1][r.letter], n_max));
        const Word& sub = capped(j - 1, r.letter);
        for (std::uint64_t c = 0; c < copies; ++c) w.insert(w.end(), sub.begin(), sub.end());
      }
    }
    return memo[j].emplace(u, std::move(w)).first->second;
  };

  const std::int32_t sep = static_cast<std::int32_t>(prof.alphabet_size);
  std::vector<std::int32_t> text;
  auto push = [&](Word::const_iterator b, Word::const_iterator e) {
    for (auto it = b; it != e; ++it) text.push_back(static_cast<std::int32_t>(*it));
  };
  for (Letter b : letters) {
    const Word& x = capped(j0, b);
    push(x.begin(), x.end());
    text.push_back(sep);
  }
  const std::size_t side = static_cast<std::size_t>(n_max - 1);
  for (const Pair& bc : pairs) {
    const Word& x = capped(j0, bc.first);
    const Word& y = capped(j0, bc.second);
    push(x.end() - static_cast<std::ptrdiff_t>(std::min(side, x.size())), x.end());
    push(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(std::min(side, y.size())));
    text.push_back(sep);
  }
  memo.clear();
  if (text.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw std::runtime_error("complexity_profile: text too large");
  }
  prof.text_length = text.size();

  const std::int32_t t = static_cast<std::int32_t>(text.size());
  std::vector<std::int32_t> rem(t);
  for (std::int32_t i = t - 1; i >= 0; --i) {
    rem[i] = text[i] == sep ? 0 : (i + 1 < t ? rem[i + 1] : 0) + 1;
  }
  std::vector<std::uint64_t> hpos(n_max + 1, 0), hlcp(n_max + 1, 0);
  for (std::int32_t i = 0; i < t; ++i) {
    if (rem[i] > 0) ++hpos[std::min<std::uint64_t>(rem[i], n_max)];
  }
  {
    const std::vector<std::int32_t> sa = suffix_array(text, sep);
    const std::vector<std::int32_t> lcp = lcp_array(text, sa);
    for (std::int32_t k = 1; k < t; ++k) {
      const std::int32_t e = std::min({lcp[k], rem[sa[k]], rem[sa[k - 1]]});
      if (e > 0) ++hlcp[std::min<std::uint64_t>(e, n_max)];
    }
  }
  prof.p.assign(n_max, 0);
  std::uint64_t spos = 0, slcp = 0;
  for (std::uint64_t n = n_max; n >= 1; --n) {
    spos += hpos[n];
    slcp += hlcp[n];
    prof.p[n - 1] = spos - slcp;
  }
  return prof;
}

BoundEvaluator::BoundEvaluator(const DirectiveSequence& ds) : ds_(&ds), lengths_(ds) {}

BigInt BoundEvaluator::max_len(std::size_t i) {
  if (!available(*ds_, i)) throw std::out_of_range("directive sequence too short for level " + std::to_string(i));
  return lengths_.max_length(i);
}

BigInt BoundEvaluator::min_len(std::size_t i) {
  if (!available(*ds_, i)) throw std::out_of_range("directive sequence too short for level " + std::to_string(i));
  return lengths_.min_length(i);
}

BoundValue BoundEvaluator::at(std::uint64_t n) {
  const DirectiveSequence& ds = *ds_;
  if (n < max_len(1)) {
    throw std::invalid_argument("complexity_bound: n=" + std::to_string(n) + " is below ||tau_0||");
  }
  std::size_t i = 1;
  for (;; ++i) {
    if (!available(ds, i + 1) || i > kPeriodicLimit) {
      throw std::out_of_range("complexity_bound: depth insufficient to locate i(n) for n=" + std::to_string(n));
    }
    if (n < max_len(i + 1)) break;
  }
  BoundValue v;
  v.level = i;
  const BigInt nn(n);
  const BigInt ai(ds.alphabet_size(i));
  const BigInt ai1(ds.alphabet_size(i + 1));
  const BigInt rc_i(r_comp(ds[i]));
  if (n < min_len(i + 1)) {
    v.regime = Regime::I;
    v.bound = (ai + (ai1 + 1) * rc_i) * nn;
    if (available(ds, i + 2)) {
      const BigInt a2(ds.alphabet_size(i + 2));
      v.coarse = 3 * a2 * a2 * a2 * nn;
    }
  } else {
    if (!available(ds, i + 2)) {
      throw std::out_of_range("complexity_bound: regime J at n=" + std::to_string(n) + " needs tau_" +
                              std::to_string(i + 1));
    }
    v.regime = Regime::J;
    const BigInt ai2(ds.alphabet_size(i + 2));
    const BigInt rc_i1(r_comp(ds[i + 1]));
    v.bound = (ai1 + ai + rc_i + (ai2 + 1) * rc_i1) * nn;
    if (available(ds, i + 3)) {
      const BigInt a3(ds.alphabet_size(i + 3));
      v.coarse = 5 * a3 * a3 * a3 * nn;
    }
  }
  return v;
}

BoundValue complexity_bound(const DirectiveSequence& ds, std::uint64_t n) {
  BoundEvaluator ev(ds);
  return ev.at(n);
}

ToeplitzReport toeplitz_check(std::span<const Letter> w, std::vector<std::uint64_t> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  candidates.erase(std::remove(candidates.begin(), candidates.end(), 0), candidates.end());

  const std::size_t n = w.size();
  ToeplitzReport rep;
  rep.window = n;
  rep.status.assign(n, PositionStatus::Refuted);
  rep.period.assign(n, 0);
  std::vector<bool> decided(n, false);
  std::vector<bool> saw_single(n, false);
  for (std::uint64_t q : candidates) {
    const std::size_t classes = static_cast<std::size_t>(std::min<std::uint64_t>(q, n));
    std::vector<char> constant(classes, 1);
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t r = p % q;
      if (p >= q && w[p] != w[p - q]) constant[r] = 0;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (decided[p]) continue;
      const std::size_t r = p % q;
      const std::uint64_t points = (n - r + q - 1) / q;
      if (points < 2) {
        saw_single[p] = true;
      } else if (constant[r]) {
        decided[p] = true;
        rep.status[p] = PositionStatus::Verified;
        rep.period[p] = q;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (decided[p]) {
      ++rep.verified;
    } else if (saw_single[p] || candidates.empty()) {
      rep.status[p] = PositionStatus::Open;
      ++rep.open;
    } else {
      ++rep.refuted;
    }
  }
  rep.flag = rep.refuted == 0;
  return rep;
}

BoshernitzanBound boshernitzan_bound(const std::vector<std::uint64_t>& p) {
  if (p.empty()) throw std::invalid_argument("boshernitzan_bound: empty profile");
  BoshernitzanBound b;
  Rational best(BigInt(p[0]), BigInt(1));
  b.argmin = 1;
  for (std::size_t k = 1; k < p.size(); ++k) {
    const Rational r(BigInt(p[k]), BigInt(k + 1));
    if (r < best) {
      best = r;
      b.argmin = k + 1;
    }
  }
  b.alpha_estimate = best + Rational(BigInt(1), BigInt(p.size()));
  const BigInt num(mp::numerator(b.alpha_estimate));
  const BigInt den(mp::denominator(b.alpha_estimate));
  // Greatest integer strictly below alpha.
  BigInt below = num / den;
  if (num % den == 0) below -= 1;
  b.measure_bound = below < 1 ? BigInt(1) : below;
  return b;
}

BoshernitzanBound boshernitzan_bound(const ComplexityProfile& profile) {
  return boshernitzan_bound(profile.p);
}

}  // namespace sadic
