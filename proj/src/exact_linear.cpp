#include "sadic/exact_linear.hpp"

#include <utility>

namespace sadic {

std::string shape_string(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

ErsResult is_ers(const IntMatrix& a) {
  ErsResult out;
  if (a.rows() == 0) return out;
  const IntVector sums = a.rowwise().sum();
  for (Eigen::Index i = 1; i < sums.size(); ++i) {
    if (sums(i) != sums(0)) return out;
  }
  out.flag = true;
  out.row_sum = sums(0);
  return out;
}

bool is_divisible(const IntMatrix& a, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("is_divisible: modulus must be >= 1");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) % k != 0) return false;
  return true;
}

RatMatrix invert_rational(const RatMatrix& j) {
  if (j.rows() != j.cols()) {
    throw DimensionMismatch("invert_rational: matrix is " + shape_string(j.rows(), j.cols()));
  }
  const Eigen::Index n = j.rows();
  RatMatrix work = j;
  RatMatrix inv = identity<Rational>(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("invert_rational: singular matrix (column " +
                                         std::to_string(col) + ")");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = work(col, col);
    work.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rational f = work(r, col);
      work.row(r) -= f * work.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

BigInt lcm_denominators(const RatMatrix& m) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = mp::lcm(l, BigInt(mp::denominator(m(i, j))));
  return l;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (mp::denominator(m(i, j)) != 1) return std::nullopt;
      out(i, j) = BigInt(mp::numerator(m(i, j)));
    }
  }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (mp::denominator(m(i, j)) != 1) return false;
  return true;
}

RatMatrix diagonal(const RatVector& d) {
  RatMatrix out = RatMatrix::Constant(d.size(), d.size(), Rational(0));
  for (Eigen::Index i = 0; i < d.size(); ++i) out(i, i) = d(i);
  return out;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (mp::denominator(v) == 1) return BigInt(mp::numerator(v)).str();
  return BigInt(mp::numerator(v)).str() + "/" + BigInt(mp::denominator(v)).str();
}

}  // namespace sadic
