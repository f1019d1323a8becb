#include "sadic/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sadic {

namespace {

std::string lvl(const std::string& what, std::size_t i) { return what + " (level " + std::to_string(i) + ")"; }

void add(ConstructionResult& res, std::size_t level, std::string condition, std::string value, bool pass,
         bool gating = true) {
  res.diagnostics.push_back({level, std::move(condition), std::move(value), pass, gating});
  if (gating && !pass && !res.failed) {
    res.failed = true;
    res.failure = res.diagnostics.back().condition + " failed at level " + std::to_string(level) + ": " +
                  res.diagnostics.back().value;
  }
}

bool any_divisible(const IntMatrix& a, const BigInt& h) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) % h == 0) return true;
  return false;
}

// Finite list of input matrices usable for telescoping.
std::size_t input_horizon(const BratteliDiagram& d, std::size_t requested) {
  return d.periodic() ? requested : std::min(requested, d.depth());
}

// Products A_{begin+k-1} ... A_begin for k = 1, 2, ..., grown on demand.
class WindowProducts {
 public:
  WindowProducts(const BratteliDiagram& d, std::size_t begin, std::size_t horizon)
      : d_(&d), begin_(begin), horizon_(horizon) {}

  // Product over [begin, begin+len), or nullptr past the horizon.
  const IntMatrix* get(std::size_t len) {
    while (prods_.size() < len) {
      const std::size_t next = begin_ + prods_.size();
      if (next >= horizon_) return nullptr;
      if (prods_.empty())
        prods_.push_back(d_->matrix(next));
      else
        prods_.push_back(mat_mul(d_->matrix(next), prods_.back()));
    }
    return &prods_[len - 1];
  }

 private:
  const BratteliDiagram* d_;
  std::size_t begin_;
  std::size_t horizon_;
  std::vector<IntMatrix> prods_;
};

RatMatrix checked_inverse(const RatMatrix& j) { return invert_rational(j); }

void finish_order(ConstructionResult& res) {
  try {
    res.final_diagram = with_injective_order(BratteliDiagram(res.final));
    res.sequence = read_morphisms(res.final_diagram);
    add(res, 0, "ordered diagram built", "ok", true);
  } catch (const std::exception& e) {
    add(res, 0, "ordered diagram built", e.what(), false);
  }
}

}  // namespace

std::string mode_name(Mode m) { return m == Mode::Main1 ? "main1" : "toeplitz"; }

Mode parse_mode(const std::string& s) {
  if (s == "main1") return Mode::Main1;
  if (s == "toeplitz") return Mode::Toeplitz;
  throw std::invalid_argument("unknown mode '" + s + "' (expected main1 or toeplitz)");
}

const Diagnostic* ConstructionResult::first_violation() const {
  for (const auto& d : diagnostics)
    if (d.gating && !d.pass) return &d;
  return nullptr;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::uint64_t threshold(const ComplexityTarget& target, std::uint64_t m, std::uint64_t i,
                        std::uint64_t scan_limit) {
  if (i == 0) throw std::invalid_argument("threshold: level index must be >= 1");
  if (scan_limit == 0) throw std::invalid_argument("threshold: scan limit must be >= 1");
  std::uint64_t limit = scan_limit;
  if (auto h = target.horizon()) limit = std::min(limit, *h);
  const BigInt coeff = BigInt(i) * BigInt(m) * BigInt(m) * BigInt(m);
  bool any = false;
  for (std::uint64_t t = limit; t >= 1; --t) {
    if (!target.defined_at(t)) continue;
    if (!target.exceeds(coeff * BigInt(t), t)) {
      if (!any) {
        throw ThresholdError("threshold scan exhausted: " + std::to_string(i) + "*" + std::to_string(m) +
                             "^3*t < p_t fails at t=" + std::to_string(t) + " (scan limit " +
                             std::to_string(limit) + ", target " + target.expression() + ")");
      }
      return t + 1;
    }
    any = true;
  }
  if (!any) throw ThresholdError("threshold scan: target undefined on [1, " + std::to_string(limit) + "]");
  return 1;
}

std::optional<std::size_t> verification_depth(const DirectiveSequence& ds, std::uint64_t n_max) {
  LengthTable lengths(ds);
  for (std::size_t k = 0; k <= ds.stored_depth(); ++k)
    if (lengths.min_length(k) >= BigInt(n_max)) return k + 3;
  return std::nullopt;
}

RatMatrix adapted_j(std::size_t m, const BigInt& h) {
  const auto n = static_cast<Eigen::Index>(2 * m);
  RatMatrix j = RatMatrix::Constant(n, n, Rational(0));
  for (Eigen::Index k = 0; k < n; k += 2) {
    j(k, k) = Rational(h);
    j(k + 1, k) = Rational(h);
    j(k + 1, k + 1) = 1;
  }
  return j;
}

ConstructionResult build_main1(const BratteliDiagram& d, const ComplexityTarget& target, std::size_t depth,
                               const ConstructionOptions& opts) {
  if (depth < 1) throw std::invalid_argument("construct: depth must be >= 1");
  const std::size_t horizon = input_horizon(d, opts.horizon);
  {
    const SimpleWitness w = check_simple(d.expanded(std::min<std::size_t>(horizon, 64)));
    if (!w.flag) throw std::invalid_argument("construct: no positive telescoping within the horizon (diagram not simple)");
  }

  ConstructionResult res;
  res.mode = Mode::Main1;
  res.target = target.expression();
  res.depth = depth;
  res.input = d;
  res.cuts = {0};

  std::size_t start = 0;
  std::size_t prev_m = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t m = d.level_size(start);
    BigInt h = 1;
    if (i > 0) {
      std::uint64_t t = 0;
      try {
        t = threshold(target, m, i, opts.scan_limit);
      } catch (const ThresholdError& e) {
        add(res, i, "threshold t_i", e.what(), false);
        return res;
      }
      res.t[i] = t;
      add(res, i, "threshold t_i", std::to_string(t), true);
      h = std::max<BigInt>(BigInt(t), BigInt(2 * prev_m)) + 1;
    }
    WindowProducts win(d, start, horizon);
    std::optional<std::size_t> accepted;
    for (std::size_t tries = 0;; ++tries, h += 1) {
      const BigInt need = h * h + h;
      std::size_t len = 1;
      const IntMatrix* p = nullptr;
      while ((p = win.get(len)) != nullptr && min_entry(*p) <= need) ++len;
      if (p == nullptr) {
        add(res, i, "telescoping horizon", "no window within " + std::to_string(horizon) +
                                               " input levels has min entry > h^2+h for h=" + to_string(h),
            false);
        return res;
      }
      for (std::size_t extra = 0; extra <= opts.window_slack; ++extra) {
        const IntMatrix* q = win.get(len + extra);
        if (q == nullptr) break;
        if (!any_divisible(*q, h)) {
          accepted = len + extra;
          break;
        }
      }
      if (accepted) break;
      if (tries > 100000) {
        add(res, i, "choice of h_i", "no admissible h found", false);
        return res;
      }
    }
    const IntMatrix a = *win.get(*accepted);
    res.a.push_back(a);
    res.h[i] = h;
    start += *accepted;
    res.cuts.push_back(start);
    add(res, i, "h_i^2 + h_i < min entry of A_i", to_string(h) + "^2+" + to_string(h) + " < " + to_string(min_entry(a)),
        h * h + h < min_entry(a));
    add(res, i, "no entry of A_i divisible by h_i", "h_i=" + to_string(h), !any_divisible(a, h));
    if (i > 0) {
      add(res, i, "h_i > t_i", to_string(h) + " > " + to_string(res.t[i]), h > res.t[i]);
      add(res, i, "h_i > 2|V_{i-1}|", to_string(h) + " > " + std::to_string(2 * prev_m), h > BigInt(2 * prev_m));
    }
    prev_m = m;
  }

  for (std::size_t i = 0; i < depth; ++i) {
    SplitResult s = split_level(res.a[i], res.h[i]);
    res.split_b.push_back(s.b);
    res.split_c.push_back(s.c);
    res.a_prime.push_back(i == 0 ? s.c : IntMatrix(mat_mul(s.c, res.split_b[i - 1])));
  }

  res.j.push_back(identity<Rational>(1));
  for (std::size_t i = 1; i <= depth; ++i) res.j.push_back(adapted_j(static_cast<std::size_t>(res.a[i - 1].cols()), res.h[i - 1]));

  for (std::size_t i = 0; i < depth; ++i) {
    const RatMatrix b = mat_mul(mat_mul(res.j[i + 1], to_rational(res.a_prime[i])), checked_inverse(res.j[i]));
    const auto bi = to_integer(b);
    add(res, i, "A''_i integral", bi ? "yes" : "fractional entry", bi.has_value());
    if (!bi) return res;
    add(res, i, "A''_i positive", "min " + to_string(min_entry(*bi)), is_positive(*bi));
    if (i > 0) {
      BigInt first = (*bi)(0, 0);
      for (Eigen::Index r = 0; r < bi->rows(); ++r) first = std::min(first, (*bi)(r, 0));
      add(res, i, "A''_i(j,1) > |V''_{i+1}|", to_string(first) + " > " + std::to_string(bi->rows()),
          first > BigInt(bi->rows()));
    }
    res.final.push_back(*bi);
  }
  if (res.failed) return res;

  finish_order(res);
  if (res.failed) return res;

  LengthTable lengths(res.sequence);
  for (std::size_t i = 1; i < depth; ++i) {
    const BigInt shortest = lengths.min_length(i + 1);
    add(res, i, "<tau_[0,i+1)> >= h_i", to_string(shortest) + " >= " + to_string(res.h[i]), shortest >= res.h[i]);
  }
  for (std::size_t i = 1; i + 1 < depth; ++i) {
    const BigInt shortest = lengths.min_length(i);
    add(res, i, "<tau_[0,i)> >= h_{i+1}", to_string(shortest) + " >= " + to_string(res.h[i + 1]),
        shortest >= res.h[i + 1], false);
  }
  return res;
}

PresplitResult presplit_divisible(const std::vector<IntMatrix>& a_seq) {
  if (a_seq.empty()) throw std::invalid_argument("presplit: empty sequence");
  PresplitResult out;
  const IntMatrix two = IntMatrix::Constant(2, 1, BigInt(1));
  if (a_seq[0].rows() == 2 && a_seq[0].cols() == 1 && a_seq[0] == two) {
    bool all_big = true;
    for (const auto& a : a_seq) all_big = all_big && a.rows() >= 2;
    if (all_big) {
      out.unchanged = true;
      // B_i = I, C_i = A_i keeps A~_i = C_i B_{i-1} = A_i.
      out.tilde = a_seq;
      out.c = a_seq;
      for (const auto& a : a_seq) out.b.push_back(identity<BigInt>(a.rows()));
      return out;
    }
  }
  for (std::size_t i = 0; i < a_seq.size(); ++i) {
    const IntMatrix& a = a_seq[i];
    if (i > 0 && a.cols() != a_seq[i - 1].rows()) throw DimensionMismatch("presplit: A_" + std::to_string(i) + " does not chain");
    if (i == 0 || a.cols() == 1) {
      // A = B (1,1)^t with B the balanced split of the single column.
      IntMatrix b(a.rows(), 2);
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        b(r, 0) = (a(r, 0) + 1) / 2;
        b(r, 1) = a(r, 0) / 2;
      }
      out.b.push_back(b);
      out.c.push_back(two);
      if (a.cols() != 1) throw DimensionMismatch("presplit: A_0 must have one column");
    } else {
      out.b.push_back(a);
      out.c.push_back(identity<BigInt>(a.cols()));
    }
    out.tilde.push_back(i == 0 ? out.c[0] : IntMatrix(mat_mul(out.c[i], out.b[i - 1])));
  }
  return out;
}

ConstructionResult build_toeplitz(const BratteliDiagram& d, const ComplexityTarget& target, std::size_t depth,
                                  const ConstructionOptions& opts) {
  if (depth < 1) throw std::invalid_argument("construct: depth must be >= 1");
  const std::size_t horizon = input_horizon(d, opts.horizon);

  ConstructionResult res;
  res.mode = Mode::Toeplitz;
  res.target = target.expression();
  res.depth = depth;
  res.input = d;
  res.divisible_asserted = true;
  res.cuts = {0};

  // Telescope only where a level will be split into two positive halves.
  const IntMatrix two = IntMatrix::Constant(2, 1, BigInt(1));
  const bool special = d.matrix(0) == two;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= depth; ++i) {
    if (start >= horizon) throw std::invalid_argument("construct: diagram has fewer levels than the requested depth");
    const IntMatrix& first = d.matrix(start);
    if (!is_positive(first)) throw std::invalid_argument(lvl("construct: input matrix A_" + std::to_string(start) + " is not positive", i));
    const bool splits = (i == 0) ? !special : first.cols() == 1;
    WindowProducts win(d, start, horizon);
    std::size_t len = 1;
    if (splits) {
      const IntMatrix* p = nullptr;
      while ((p = win.get(len)) != nullptr && min_entry(*p) < 2) ++len;
      if (p == nullptr) throw std::invalid_argument(lvl("construct: telescoping horizon exhausted", i));
    }
    res.a.push_back(*win.get(len));
    start += len;
    res.cuts.push_back(start);
  }

  PresplitResult pre = presplit_divisible(res.a);
  res.split_b = pre.b;
  res.split_c = pre.c;
  res.a_prime = pre.tilde;
  const std::vector<IntMatrix>& tilde = pre.tilde;
  for (std::size_t i = 0; i < depth; ++i)
    add(res, i, "presplit matrix positive", "min " + to_string(min_entry(tilde[i])), is_positive(tilde[i]));
  if (res.failed) return res;

  // m_i = |V~_i|; m_{depth+1} comes from the extra presplit level.
  auto m = [&](std::size_t i) -> std::size_t { return i == 0 ? 1 : static_cast<std::size_t>(tilde[i - 1].rows()); };

  res.j.push_back(identity<Rational>(1));
  res.j.push_back(identity<Rational>(static_cast<Eigen::Index>(m(1))));
  res.k[1] = 1;
  res.final.push_back(tilde[0]);
  for (std::size_t i = 2; i <= depth; ++i) {
    const RatMatrix x = mat_mul(to_rational(tilde[i - 1]), checked_inverse(res.j[i - 1]));
    RatVector inv_sums(x.rows());
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      Rational sum = 0;
      for (Eigen::Index c = 0; c < x.cols(); ++c) sum += x(r, c);
      if (sum <= 0) {
        add(res, i, "row sums of A_{i-1} J_{i-1}^{-1} positive", "row " + std::to_string(r + 1), false);
        return res;
      }
      inv_sums(r) = 1 / sum;
    }
    const RatMatrix y = mat_mul(diagonal(inv_sums), x);
    const BigInt s = lcm_denominators(y);
    std::uint64_t t = 0;
    try {
      t = threshold(target, m(i + 1), i + 1, opts.scan_limit);
    } catch (const ThresholdError& e) {
      add(res, i, "threshold t_i", e.what(), false);
      return res;
    }
    res.t[i] = t;
    add(res, i, "threshold t_i", std::to_string(t), true);
    const BigInt is = BigInt(i) * s;
    // smallest ell with i s ell > t and i s ell min(Y) > m_i
    BigInt ell = BigInt(t) / is + 1;
    const Rational bound2 = Rational(BigInt(m(i))) / (Rational(is) * min_entry(y));
    const BigInt ell2 = BigInt(mp::numerator(bound2) / mp::denominator(bound2)) + 1;
    ell = std::max(ell, ell2);
    const BigInt k = is * ell;
    res.s[i] = s;
    res.ell[i] = ell;
    res.k[i] = k;
    res.j.push_back(Rational(k) * diagonal(inv_sums));
    const auto b = to_integer(Rational(k) * y);
    add(res, i - 1, "B_i integral", b ? "yes" : "fractional entry", b.has_value());
    if (!b) return res;
    res.final.push_back(*b);
    add(res, i, "k_i > t_i", to_string(k) + " > " + std::to_string(t), k > BigInt(t));
  }
  for (std::size_t i = 0; i < depth; ++i) {
    const IntMatrix& b = res.final[i];
    const ErsResult ers = is_ers(b);
    add(res, i, "B_i has equal row sums k_{i+1}", ers.row_sum ? to_string(*ers.row_sum) : "unequal",
        ers.flag && *ers.row_sum == res.k[i + 1]);
    if (i >= 1) {
      add(res, i, "B_i divisible by i+1", std::to_string(i + 1), is_divisible(b, BigInt(i + 1)));
      add(res, i, "entries of B_i > |V_{i+1}|", to_string(min_entry(b)) + " > " + std::to_string(b.rows()),
          min_entry(b) > BigInt(b.rows()));
    }
  }
  if (res.failed) return res;
  finish_order(res);
  return res;
}

namespace {

void push(VerificationReport& r, std::string name, bool pass, std::string detail, bool gating = true) {
  r.checks.push_back({std::move(name), pass, std::move(detail), gating});
}

RatMatrix chain(const std::vector<IntMatrix>& seq, std::size_t upto) {
  RatMatrix p = to_rational(seq[0]);
  for (std::size_t i = 1; i <= upto; ++i) p = mat_mul(to_rational(seq[i]), p);
  return p;
}

}  // namespace

VerificationReport verify_construction(const ConstructionResult& res, const ComplexityTarget& target,
                                       std::uint64_t n_max, const VerifyOptions& opts) {
  VerificationReport rep;
  if (res.failed) {
    rep.skipped = true;
    rep.pass = false;
    push(rep, "construction", false, "construction FAILED: " + res.failure);
    return rep;
  }
  const std::size_t depth = res.depth;

  // Linear algebra.
  {
    bool ok = true;
    std::string detail = "levels 0.." + std::to_string(depth - 1);
    for (std::size_t i = 0; i < depth && ok; ++i) {
      RatMatrix lhs = chain(res.a, i);
      RatMatrix rhs = mat_mul(to_rational(res.split_b[i]), chain(res.a_prime, i));
      if (lhs != rhs) {
        ok = false;
        detail = "mismatch at level " + std::to_string(i);
      }
    }
    push(rep, "splitting intertwining", ok, detail);
  }
  {
    bool ok = true;
    std::string detail = "levels 0.." + std::to_string(depth - 1);
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const RatMatrix b = mat_mul(mat_mul(res.j[i + 1], to_rational(res.a_prime[i])), invert_rational(res.j[i]));
      const RatMatrix lhs = mat_mul(chain(res.final, i), res.j[0]);
      const RatMatrix rhs = mat_mul(res.j[i + 1], chain(res.a_prime, i));
      if (b != to_rational(res.final[i]) || lhs != rhs) {
        ok = false;
        detail = "mismatch at level " + std::to_string(i);
      }
    }
    push(rep, "adapted intertwining", ok, detail);
  }
  rep.adapted = verify_adapted(res.a_prime, res.j, depth);
  {
    bool m_ok = true, b_ok = true, pos = true;
    for (const auto& lv : rep.adapted->levels) {
      m_ok = m_ok && lv.m_found.has_value();
      b_ok = b_ok && lv.b_integral && lv.b_nonnegative && lv.b == to_rational(res.final[lv.level]);
    }
    pos = rep.adapted->strict;
    const bool main1 = res.mode == Mode::Main1;
    push(rep, "adapted condition (1)", m_ok, m_ok ? "M found at every level" : "no M within the horizon", main1);
    push(rep, "adapted condition (2)", b_ok, b_ok ? "B_i nonnegative integral" : "B_i fractional, negative or not the stored matrix");
    push(rep, "adapted positivity", pos, pos ? "strict" : "some J, J^-1 or B not strictly positive", false);
  }

  // Diagnostics recorded by the construction.
  {
    bool ok = res.first_violation() == nullptr;
    push(rep, "construction diagnostics", ok, ok ? std::to_string(res.diagnostics.size()) + " entries" : res.first_violation()->condition);
  }

  // Complexity.
  try {
    rep.profile = complexity_profile(res.sequence, n_max);
    push(rep, "profile stabilized", rep.profile.stabilized,
         "level " + std::to_string(rep.profile.level_used) + ", depth " + std::to_string(rep.profile.stabilized_at));
  } catch (const std::exception& e) {
    push(rep, "profile stabilized", false, e.what());
    rep.pass = false;
    return rep;
  }
  rep.boshernitzan = boshernitzan_bound(rep.profile);

  BoundEvaluator eval(res.sequence);
  const BigInt tau0 = eval.max_len(1);
  rep.bounds.assign(n_max, std::nullopt);
  {
    std::size_t checked = 0, coarse_checked = 0;
    std::string bad, bad_coarse, missing;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (BigInt(n) < tau0) continue;
      try {
        rep.bounds[n - 1] = eval.at(n);
      } catch (const std::exception& e) {
        if (missing.empty()) missing = e.what();
        continue;
      }
      const BoundValue& bv = *rep.bounds[n - 1];
      const BigInt p = rep.profile.at(n);
      ++checked;
      if (p > bv.bound && bad.empty()) bad = "n=" + std::to_string(n) + ": p=" + to_string(p) + " > " + to_string(bv.bound);
      if (bv.coarse) {
        ++coarse_checked;
        if (p > *bv.coarse && bad_coarse.empty())
          bad_coarse = "n=" + std::to_string(n) + ": p=" + to_string(p) + " > " + to_string(*bv.coarse);
      }
    }
    const bool ok = bad.empty() && missing.empty() && checked > 0;
    push(rep, "complexity bound", ok,
         !bad.empty() ? bad : !missing.empty() ? missing : std::to_string(checked) + " values of n checked");
    push(rep, "coarse bound", bad_coarse.empty() && missing.empty() && coarse_checked > 0,
         !bad_coarse.empty() ? bad_coarse : std::to_string(coarse_checked) + " values of n checked");
  }

  rep.ratio.assign(n_max, std::nan(""));
  for (std::uint64_t n = 1; n <= n_max; ++n)
    if (target.defined_at(n))
      rep.ratio[n - 1] = static_cast<long double>(rep.profile.at(n)) / target.approx(n);
  {
    std::uint64_t lo = 1;
    while (lo * 10 - 1 <= n_max) {
      long double best = -1;
      for (std::uint64_t n = lo; n < lo * 10; ++n)
        if (!std::isnan(rep.ratio[n - 1])) best = std::max(best, rep.ratio[n - 1]);
      rep.decade_max.push_back(best);
      lo *= 10;
    }
    bool dec = rep.decade_max.size() >= 3;
    for (std::size_t k = 1; k < rep.decade_max.size(); ++k) dec = dec && rep.decade_max[k] < rep.decade_max[k - 1];
    rep.decades_decreasing = dec;
    std::ostringstream os;
    for (std::size_t k = 0; k < rep.decade_max.size(); ++k) os << (k ? " " : "") << static_cast<double>(rep.decade_max[k]);
    push(rep, "decade maxima decreasing", dec, os.str());
  }

  // Toeplitz window.
  if (res.mode == Mode::Toeplitz) {
    BigInt kk = 1;
    std::vector<BigInt> big_k{BigInt(1)};  // K_0 placeholder
    for (std::size_t i = 1; i <= depth; ++i) {
      kk *= res.k.at(i);
      big_k.push_back(kk);
    }
    for (std::size_t i = 2; i <= depth; ++i)
      if (big_k[i] < BigInt(std::numeric_limits<std::uint64_t>::max()))
        rep.toeplitz_candidates.push_back(big_k[i].convert_to<std::uint64_t>());
    try {
      const GeneratedWord gw = generate_word(res.sequence, 0, 0, opts.toeplitz_window);
      rep.toeplitz = toeplitz_check(gw.word, rep.toeplitz_candidates);
      push(rep, "toeplitz window", rep.toeplitz->flag,
           std::to_string(rep.toeplitz->verified) + " verified, " + std::to_string(rep.toeplitz->open) + " open, " +
               std::to_string(rep.toeplitz->refuted) + " refuted");
      bool skel = true;
      std::string detail = "ok";
      const std::uint64_t w = gw.word.size();
      for (std::size_t i = 1; i < depth && skel; ++i) {
        if (big_k[i + 1] >= BigInt(w)) break;
        const auto ki = big_k[i].convert_to<std::uint64_t>();
        const auto ki1 = big_k[i + 1].convert_to<std::uint64_t>();
        for (std::uint64_t p = 0; p < w; ++p) {
          if (p % ki1 >= ki) continue;
          const bool two_points = p + ki1 < w || p >= ki1;
          if (!two_points) continue;
          if (rep.toeplitz->status[p] != PositionStatus::Verified || rep.toeplitz->period[p] > ki1) {
            skel = false;
            detail = "position " + std::to_string(p) + " not verified with period <= " + std::to_string(ki1);
            break;
          }
        }
      }
      push(rep, "toeplitz skeleton", skel, detail);
    } catch (const std::exception& e) {
      push(rep, "toeplitz window", false, e.what());
    }
  }

  // Recognizability of the level morphisms.
  {
    bool marker_ok = true, decode_ok = true;
    std::string marker_detail = "ok", decode_detail = "ok";
    std::vector<std::size_t> exempt;
    for (std::size_t i = 1; i < res.sequence.stored_depth(); ++i) {
      const Morphism& tau = res.sequence[i];
      const auto words = sample_words(tau.domain_size(), opts.exhaustive_word_length, opts.random_words,
                                      opts.random_word_length, opts.seed + i);
      rep.recognizability.push_back(verify_recognizability(tau, words));
      const auto& rr = rep.recognizability.back();
      if (rr.alphabet_size >= 3) {
        if (!rr.marker.holds && marker_ok) {
          marker_ok = false;
          marker_detail = "level " + std::to_string(i);
        }
      } else {
        exempt.push_back(i);
      }
      if (!rr.decoding.unique && decode_ok) {
        decode_ok = false;
        decode_detail = "level " + std::to_string(i) + ": " + std::to_string(rr.decoding.ambiguous) + " ambiguous";
      }
    }
    push(rep, "marker property", marker_ok, marker_detail);
    push(rep, "unique decoding", decode_ok, decode_detail);
    if (!exempt.empty()) {
      std::string lv;
      for (auto i : exempt) lv += (lv.empty() ? "" : ",") + std::to_string(i);
      push(rep, "marker exception (two-letter codomain)", true, "levels " + lv + " checked by decoding only", false);
    }
  }

  rep.pass = true;
  for (const auto& c : rep.checks)
    if (c.gating && !c.pass) rep.pass = false;
  return rep;
}

}  // namespace sadic
