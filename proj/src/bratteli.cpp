#include "sadic/bratteli.hpp"

#include <stdexcept>
#include <string>

namespace sadic {

BratteliDiagram::BratteliDiagram(std::vector<IntMatrix> incidences,
                                 std::optional<std::size_t> repeat_from)
    : incidences_(std::move(incidences)), repeat_from_(repeat_from) {
  if (incidences_.empty()) throw std::invalid_argument("diagram has no incidence matrices");
  if (incidences_[0].cols() != 1) {
    throw DimensionMismatch("A_0 must have one column (|V_0| = 1), got " +
                            shape_string(incidences_[0].rows(), incidences_[0].cols()));
  }
  for (std::size_t i = 0; i < incidences_.size(); ++i) {
    const IntMatrix& a = incidences_[i];
    if (a.rows() < 1 || a.cols() < 1) throw DimensionMismatch("empty incidence matrix A_" + std::to_string(i));
    if (i > 0 && a.cols() != incidences_[i - 1].rows()) {
      throw DimensionMismatch("A_" + std::to_string(i) + " is " + shape_string(a.rows(), a.cols()) +
                              " but |V_" + std::to_string(i) + "| = " +
                              std::to_string(incidences_[i - 1].rows()));
    }
    if (!is_nonnegative(a)) throw std::invalid_argument("A_" + std::to_string(i) + " has a negative entry");
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (a.row(r).sum() == 0) {
        throw std::invalid_argument("A_" + std::to_string(i) + ": vertex " + std::to_string(r + 1) +
                                    " of level " + std::to_string(i + 1) + " has no incoming edge");
      }
    }
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a.col(c).sum() == 0) {
        throw std::invalid_argument("A_" + std::to_string(i) + ": vertex " + std::to_string(c + 1) +
                                    " of level " + std::to_string(i) + " has no outgoing edge");
      }
    }
  }
  if (repeat_from_) {
    if (*repeat_from_ >= incidences_.size()) throw std::invalid_argument("repeat index out of range");
    if (*repeat_from_ == 0) throw std::invalid_argument("A_0 cannot be repeated");
    if (incidences_[*repeat_from_].cols() != incidences_.back().rows()) {
      throw DimensionMismatch("repeated block does not chain: |V| mismatch at the wrap");
    }
  }
}

const IntMatrix& BratteliDiagram::matrix(std::size_t i) const {
  if (i < incidences_.size()) return incidences_[i];
  if (!repeat_from_) {
    throw std::out_of_range("level " + std::to_string(i) + " beyond stored depth " +
                            std::to_string(incidences_.size()));
  }
  const std::size_t cycle = incidences_.size() - *repeat_from_;
  return incidences_[*repeat_from_ + (i - *repeat_from_) % cycle];
}

std::size_t BratteliDiagram::level_size(std::size_t level) const {
  if (level == 0) return 1;
  return static_cast<std::size_t>(matrix(level - 1).rows());
}

std::vector<std::size_t> BratteliDiagram::level_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l <= depth(); ++l) out.push_back(level_size(l));
  return out;
}

BratteliDiagram BratteliDiagram::expanded(std::size_t depth) const {
  std::vector<IntMatrix> mats;
  mats.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) mats.push_back(matrix(i));
  return BratteliDiagram(std::move(mats));
}

void BratteliDiagram::set_order(std::vector<Morphism> order) {
  if (order.size() != incidences_.size()) {
    throw std::invalid_argument("order must give one morphism per stored level");
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const IntMatrix& a = incidences_[i];
    if (i == 0) {
      if (order[0].domain_size() != static_cast<std::size_t>(a.rows())) {
        throw std::invalid_argument("level-0 order does not match |V_1|");
      }
      for (Eigen::Index j = 0; j < a.rows(); ++j) {
        if (BigInt(order[0].image_length(static_cast<Letter>(j))) != a(j, 0)) {
          throw std::invalid_argument("level-0 order: vertex " + std::to_string(j + 1) +
                                      " has the wrong number of edges");
        }
      }
      continue;
    }
    if (incidence(order[i]).transpose() != a) {
      throw std::invalid_argument("order at level " + std::to_string(i) +
                                  " does not match the incidence matrix");
    }
  }
  order_ = std::move(order);
}

IntMatrix product(const BratteliDiagram& d, std::size_t begin, std::size_t end) {
  IntMatrix p = identity<BigInt>(static_cast<Eigen::Index>(d.level_size(begin)));
  for (std::size_t i = begin; i < end; ++i) p = mat_mul(d.matrix(i), p);
  return p;
}

BratteliDiagram telescope(const BratteliDiagram& d, const std::vector<std::size_t>& cuts) {
  if (cuts.size() < 2 || cuts[0] != 0) {
    throw std::invalid_argument("telescope: cuts must start at 0 and contain at least two levels");
  }
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    if (cuts[k] <= cuts[k - 1]) throw std::invalid_argument("telescope: cuts must be strictly increasing");
  }
  if (!d.periodic() && cuts.back() > d.depth()) {
    throw std::out_of_range("telescope: cut " + std::to_string(cuts.back()) +
                            " beyond stored depth " + std::to_string(d.depth()));
  }
  std::vector<IntMatrix> mats;
  for (std::size_t k = 1; k < cuts.size(); ++k) mats.push_back(product(d, cuts[k - 1], cuts[k]));
  return BratteliDiagram(std::move(mats));
}

SplitResult split_level(const IntMatrix& a, const BigInt& d) {
  if (d < 1) throw std::invalid_argument("split_level: d must be >= 1");
  if (!is_positive(a)) throw std::invalid_argument("split_level: A must be entrywise positive");
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  SplitResult s;
  s.d = d;
  s.q.resize(n, m);
  s.r.resize(n, m);
  s.b.resize(n, 2 * m);
  s.c = IntMatrix::Constant(2 * m, m, BigInt(0));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < m; ++j) {
      s.q(k, j) = a(k, j) / d;
      s.r(k, j) = a(k, j) % d;
      s.b(k, 2 * j) = d * s.q(k, j);
      s.b(k, 2 * j + 1) = s.r(k, j);
    }
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    s.c(2 * j, j) = 1;
    s.c(2 * j + 1, j) = 1;
  }
  if (mat_mul(s.b, s.c) != a) throw std::logic_error("split_level: B*C != A");
  return s;
}

IntVector path_counts(const BratteliDiagram& d, std::size_t level) {
  if (!d.periodic() && level > d.depth()) {
    throw std::out_of_range("path_counts: level " + std::to_string(level) + " beyond depth " +
                            std::to_string(d.depth()));
  }
  IntVector v = ones<BigInt>(1);
  for (std::size_t i = 0; i < level; ++i) v = mat_mul(d.matrix(i), v);
  return v;
}

SimpleWitness check_simple(const BratteliDiagram& d) {
  const std::size_t n = d.depth();
  // A_0 is a positive column whenever the diagram is valid, so windows start
  // at level 1.
  for (std::size_t end = 2; end <= n; ++end) {
    if (is_positive(product(d, 1, end))) return {true, 1, end};
  }
  return {};
}

AdaptedReport verify_adapted(const std::vector<IntMatrix>& a_seq,
                             const std::vector<RatMatrix>& j_seq, std::size_t horizon) {
  if (horizon > a_seq.size()) {
    throw std::invalid_argument("verify_adapted: horizon exceeds the number of matrices");
  }
  if (j_seq.size() < horizon + 1) {
    throw std::invalid_argument("verify_adapted: need J_0 .. J_" + std::to_string(horizon));
  }
  std::vector<RatMatrix> j_inv;
  for (std::size_t i = 0; i <= horizon; ++i) {
    const RatMatrix& j = j_seq[i];
    const Eigen::Index want = i == 0 ? a_seq[0].cols() : a_seq[i - 1].rows();
    if (j.rows() != want || j.cols() != want) {
      throw DimensionMismatch("J_" + std::to_string(i) + " is " + shape_string(j.rows(), j.cols()) +
                              ", expected " + shape_string(want, want));
    }
    j_inv.push_back(invert_rational(j));
  }

  AdaptedReport rep;
  rep.integral = true;
  rep.strict = true;
  for (std::size_t i = 0; i < horizon; ++i) {
    AdaptedLevel lv;
    lv.level = i;
    lv.j_positive = is_positive(j_seq[i]);
    lv.j_inverse_positive = is_positive(j_inv[i]);

    RatMatrix prod = j_inv[i];
    for (std::size_t m = i; m < horizon; ++m) {
      prod = mat_mul(to_rational(a_seq[m]), prod);
      if (is_integral(prod) && is_nonnegative(prod)) {
        lv.m_found = m;
        lv.m_product_positive = is_positive(prod);
        break;
      }
    }

    lv.b = mat_mul(mat_mul(j_seq[i + 1], to_rational(a_seq[i])), j_inv[i]);
    lv.b_integral = is_integral(lv.b);
    lv.b_nonnegative = is_nonnegative(lv.b);
    lv.b_positive = is_positive(lv.b);

    rep.integral = rep.integral && lv.m_found && lv.b_integral && lv.b_nonnegative;
    rep.strict = rep.strict && lv.m_found && lv.m_product_positive && lv.b_integral &&
                 lv.b_positive && lv.j_positive && lv.j_inverse_positive;
    rep.levels.push_back(std::move(lv));
  }
  return rep;
}

}  // namespace sadic
