#pragma once

// Exact dense linear algebra over arbitrary-precision integers and rationals.
//
// Matrices are plain Eigen dense matrices whose scalar is a GMP-backed
// Boost.Multiprecision number, so the usual Eigen expressions (products,
// blocks, reductions) work unchanged and never round.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sadic {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<BigInt>;
using RatVector = Vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::string shape_string(Eigen::Index rows, Eigen::Index cols);

/// Exact product A·B. Rational results are canonical because the scalar
/// type keeps every value in lowest terms.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> mat_mul(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "mat_mul operands must share a scalar type");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + shape_string(a.rows(), a.cols()) + " times " +
                            shape_string(b.rows(), b.cols()));
  }
  return a.derived() * b.derived();
}

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = Scalar(1);
  return out;
}

template <typename Scalar>
Vector<Scalar> ones(Eigen::Index n) {
  return Vector<Scalar>::Constant(n, Scalar(1));
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) <= 0) return false;
  return true;
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

template <typename Derived>
typename Derived::Scalar min_entry(const Eigen::MatrixBase<Derived>& m) {
  typename Derived::Scalar best = m(0, 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < best) best = m(i, j);
  return best;
}

struct ErsResult {
  bool flag = false;
  std::optional<BigInt> row_sum;
};

/// Equal-row-sum test.
ErsResult is_ers(const IntMatrix& a);

/// True iff every entry is a multiple of k (k >= 1).
bool is_divisible(const IntMatrix& a, const BigInt& k);

/// Exact inverse by Gauss-Jordan elimination, pivoting on the first nonzero
/// entry of each column. Throws SingularMatrix / DimensionMismatch.
RatMatrix invert_rational(const RatMatrix& j);

/// Least s >= 1 with s·M integral.
BigInt lcm_denominators(const RatMatrix& m);

inline RatMatrix to_rational(const IntMatrix& a) { return a.cast<Rational>(); }

/// The integer matrix equal to `m`, or nullopt when some entry is fractional.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

bool is_integral(const RatMatrix& m);

RatMatrix diagonal(const RatVector& d);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace sadic
