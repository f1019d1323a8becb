#pragma once

// Hand-rolled generators and independent oracles shared by the tests.

#include "sadic/exact_linear.hpp"
#include "sadic/morphism.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using sadic::BigInt;
using sadic::IntMatrix;
using sadic::Rational;
using sadic::RatMatrix;

inline IntMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Schoolbook triple loop, kept apart from the library product.
template <typename S>
sadic::Matrix<S> naive_mul(const sadic::Matrix<S>& a, const sadic::Matrix<S>& b) {
  sadic::Matrix<S> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Letters as chars, 'a' = 0.
inline sadic::Word w(const std::string& s) {
  sadic::Word out;
  for (char c : s) out.push_back(static_cast<sadic::Letter>(c - 'a'));
  return out;
}

inline std::string str(const sadic::Word& x) {
  std::string s;
  for (auto l : x) s.push_back(static_cast<char>('a' + l));
  return s;
}

inline sadic::Morphism morph(std::size_t codomain, std::initializer_list<const char*> images) {
  std::vector<sadic::Word> v;
  for (const char* s : images) v.push_back(w(s));
  return sadic::Morphism::from_words(codomain, v);
}

// Fibonacci word by the recurrence f_{k+1} = f_k f_{k-1}, independent of any morphism code.
inline std::string fibonacci_word(std::size_t min_len) {
  std::string prev = "b", cur = "a";
  while (cur.size() < min_len) {
    std::string next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline std::size_t distinct_slices(const std::string& s, std::size_t n) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
  return seen.size();
}

}  // namespace testing
