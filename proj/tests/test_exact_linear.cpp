#include "sadic/exact_linear.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace sadic;
using testing::make;

TEST_CASE("products against the schoolbook loop") {
  const IntMatrix a = make({{1, 2}, {3, 4}});
  CHECK(mat_mul(a, identity<BigInt>(2)) == a);
  CHECK(mat_mul(a, make({{1}, {1}})) == make({{3}, {7}}));
  CHECK_THROWS_AS(mat_mul(a, make({{1, 2, 3}})), DimensionMismatch);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const int n = dim(rng), k = dim(rng), m = dim(rng);
    const IntMatrix x = testing::random_matrix(rng, n, k, -1000000, 1000000);
    const IntMatrix y = testing::random_matrix(rng, k, m, -1000000, 1000000);
    REQUIRE(mat_mul(x, y) == testing::naive_mul(x, y));
  }
}

TEST_CASE("associativity on random big matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const int a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    IntMatrix x = testing::random_matrix(rng, a, b, -1000000000, 1000000000);
    const IntMatrix y = testing::random_matrix(rng, b, c, -1000000000, 1000000000);
    const IntMatrix z = testing::random_matrix(rng, c, d, -1000000000, 1000000000);
    x *= BigInt("123456789012345678901");  // push past 64 bits
    REQUIRE(mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z)));
  }
}

TEST_CASE("equal row sums") {
  auto e = is_ers(make({{2, 3}, {4, 1}}));
  CHECK(e.flag);
  CHECK(*e.row_sum == 5);
  CHECK_FALSE(is_ers(make({{1, 2}, {3, 4}})).flag);
  CHECK(*is_ers(make({{17}})).row_sum == 17);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, 1 + trial % 4, 1 + trial % 3, 0, 3);
    const IntMatrix s = mat_mul(a, ones<BigInt>(a.cols()));
    const bool constant = (s.array() == s(0, 0)).all();
    REQUIRE(is_ers(a).flag == constant);
  }
}

TEST_CASE("divisibility") {
  CHECK(is_divisible(make({{6, 4}, {2, 8}}), 2));
  CHECK_FALSE(is_divisible(make({{6, 4}, {2, 8}}), 3));
  CHECK(is_divisible(make({{7, 5}}), 1));
}

TEST_CASE("exact inverse") {
  RatMatrix d = RatMatrix::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  RatMatrix dinv = RatMatrix::Zero(2, 2);
  dinv(0, 0) = Rational(1, 2);
  dinv(1, 1) = Rational(1, 3);
  CHECK(invert_rational(d) == dinv);

  const RatMatrix u = to_rational(make({{1, 0}, {1, 1}}));
  CHECK(invert_rational(u) == to_rational(make({{1, 0}, {-1, 1}})));

  const RatMatrix j = to_rational(make({{2, 0}, {2, 1}}));
  RatMatrix jinv(2, 2);
  jinv << Rational(1, 2), Rational(0), Rational(-1), Rational(1);
  CHECK(invert_rational(j) == jinv);
  CHECK(mat_mul(j, jinv) == identity<Rational>(2));

  CHECK_THROWS_AS(invert_rational(to_rational(make({{1, 2}, {2, 4}}))), SingularMatrix);
  CHECK_THROWS_AS(invert_rational(to_rational(make({{1, 2}}))), DimensionMismatch);

  std::mt19937_64 rng(14);
  int tested = 0;
  for (int trial = 0; tested < 60 && trial < 500; ++trial) {
    const int n = 1 + trial % 5;
    const RatMatrix m = to_rational(testing::random_matrix(rng, n, n, -9, 9));
    RatMatrix inv;
    try {
      inv = invert_rational(m);
    } catch (const SingularMatrix&) {
      continue;
    }
    ++tested;
    REQUIRE(mat_mul(m, inv) == identity<Rational>(n));
    REQUIRE(mat_mul(inv, m) == identity<Rational>(n));
  }
  CHECK(tested == 60);
}

TEST_CASE("lcm of denominators") {
  RatMatrix m(2, 2);
  m << Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(2, 3);
  CHECK(lcm_denominators(m) == 6);
  CHECK(lcm_denominators(to_rational(make({{4, 5}}))) == 1);
  RatMatrix q(2, 1);
  q << Rational(3, 4), Rational(5, 6);
  CHECK(lcm_denominators(q) == 12);

  // the least s is the first one found by scanning, and divides every later one
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix r(2, 2);
    for (int k = 0; k < 4; ++k) r(k / 2, k % 2) = Rational(num(rng), den(rng));
    const BigInt s = lcm_denominators(r);
    BigInt first = 0;
    for (int t = 1; t <= 30000; ++t) {
      if (is_integral(RatMatrix(Rational(t) * r))) {
        if (first == 0) first = t;
        REQUIRE(BigInt(t) % s == 0);
      }
    }
    REQUIRE(first == s);
  }
}

TEST_CASE("integral conversion") {
  RatMatrix m(1, 2);
  m << Rational(4, 2), Rational(3);
  REQUIRE(to_integer(m).has_value());
  CHECK(*to_integer(m) == make({{2, 3}}));
  m(0, 1) = Rational(1, 3);
  CHECK_FALSE(to_integer(m).has_value());
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
}
