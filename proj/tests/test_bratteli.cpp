#include "sadic/bratteli.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace sadic;
using testing::make;

namespace {

IntMatrix product_oracle(const std::vector<IntMatrix>& mats, std::size_t begin, std::size_t end) {
  IntMatrix p = identity<BigInt>(mats[begin].cols());
  for (std::size_t i = begin; i < end; ++i) p = testing::naive_mul(mats[i], p);
  return p;
}

std::vector<IntMatrix> random_chain(std::mt19937_64& rng, std::size_t depth, long hi) {
  std::uniform_int_distribution<int> dim(1, 4);
  std::vector<IntMatrix> mats;
  Eigen::Index cols = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    const Eigen::Index rows = dim(rng);
    mats.push_back(testing::random_matrix(rng, rows, cols, 1, hi));
    cols = rows;
  }
  return mats;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_NOTHROW(BratteliDiagram({make({{1}, {1}}), make({{1, 1}, {1, 2}})}));
  CHECK_THROWS(BratteliDiagram({make({{1, 1}})}));                       // A_0 needs one column
  CHECK_THROWS(BratteliDiagram({make({{1}, {1}}), make({{1, 1, 1}})}));  // does not chain
  CHECK_THROWS(BratteliDiagram({make({{1}, {0}})}));                     // vertex without edges
  CHECK_THROWS(BratteliDiagram({make({{1}, {-1}})}));
  CHECK_THROWS(BratteliDiagram({make({{1}, {1}}), make({{1, 0}, {1, 0}})}));  // source vertex

  const BratteliDiagram d({make({{1}, {1}}), make({{3, 1}, {1, 3}})}, 1);
  CHECK(d.matrix(7) == make({{3, 1}, {1, 3}}));
  CHECK(d.level_size(9) == 2);
  CHECK(d.expanded(5).depth() == 5);
}

TEST_CASE("telescoping") {
  const IntMatrix a0 = make({{1}, {1}}), a1 = make({{1, 1}, {1, 2}});
  const BratteliDiagram d({a0, a1});
  const BratteliDiagram t = telescope(d, {0, 2});
  REQUIRE(t.depth() == 1);
  CHECK(t.matrix(0) == make({{2}, {3}}));
  CHECK(telescope(d, {0, 1, 2}).incidences() == d.incidences());

  const IntMatrix a2 = make({{2, 1}, {1, 1}, {0, 1}});
  const BratteliDiagram e({a0, a1, a2});
  const BratteliDiagram u = telescope(e, {0, 1, 3});
  REQUIRE(u.depth() == 2);
  CHECK(u.matrix(0) == a0);
  CHECK(u.matrix(1) == testing::naive_mul(a2, a1));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t depth = 1 + trial % 8;
    const auto mats = random_chain(rng, depth, 5);
    const BratteliDiagram g(mats);
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 1; i < depth; ++i)
      if (rng() % 2) cuts.push_back(i);
    cuts.push_back(depth);
    const BratteliDiagram tg = telescope(g, cuts);
    REQUIRE(product(tg, 0, tg.depth()) == product_oracle(mats, 0, depth));
    for (std::size_t k = 1; k < cuts.size(); ++k)
      REQUIRE(tg.matrix(k - 1) == product_oracle(mats, cuts[k - 1], cuts[k]));
  }
}

TEST_CASE("splitting") {
  const IntMatrix a = make({{7, 8}, {9, 10}});
  const SplitResult s = split_level(a, 2);
  CHECK(s.b == make({{6, 1, 8, 0}, {8, 1, 10, 0}}));
  CHECK(s.c == make({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  CHECK(testing::naive_mul(s.b, s.c) == a);

  const SplitResult t = split_level(make({{5}}), 2);
  CHECK(t.q == make({{2}}));
  CHECK(t.r == make({{1}}));
  CHECK(t.b == make({{4, 1}}));
  CHECK(t.c == make({{1}, {1}}));

  const SplitResult one = split_level(a, 1);
  CHECK(one.r.isZero());
  CHECK(testing::naive_mul(one.b, one.c) == a);

  CHECK_THROWS(split_level(make({{0, 1}}), 1));
  CHECK_THROWS(split_level(a, 0));

  // every valid d on random positive matrices
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = testing::random_matrix(rng, 1 + trial % 4, 1 + trial % 3, 1, 60);
    const long top = min_entry(m).convert_to<long>();
    for (long d = 1; d <= top; ++d) {
      const SplitResult r = split_level(m, d);
      REQUIRE(testing::naive_mul(r.b, r.c) == m);
      REQUIRE(((r.r.array() >= 0) && (r.r.array() < BigInt(d))).all());
    }
  }
}

TEST_CASE("path counts") {
  const BratteliDiagram d({make({{1}, {1}}), make({{1, 1}, {1, 2}})});
  CHECK(path_counts(d, 0) == make({{1}}));
  CHECK(path_counts(d, 1) == make({{1}, {1}}));
  CHECK(path_counts(d, 2) == make({{2}, {3}}));

  // equal row sums k_1, k_2, ... give the constant vector k_1 ... k_L
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntMatrix> mats{make({{3}, {3}})};
    BigInt expected = 3;
    for (int level = 1; level < 5; ++level) {
      const long k = 2 + static_cast<long>(rng() % 5);
      IntMatrix a(2, 2);
      for (int r = 0; r < 2; ++r) {
        const long x = 1 + static_cast<long>(rng() % (k - 1));
        a(r, 0) = x;
        a(r, 1) = k - x;
      }
      mats.push_back(a);
      expected *= k;
    }
    const BratteliDiagram g(mats);
    const IntVector v = path_counts(g, mats.size());
    REQUIRE(((v.array() == expected)).all());
  }
}

TEST_CASE("simplicity witness") {
  const BratteliDiagram pos({make({{1}, {1}}), make({{1, 2}, {3, 1}})});
  const SimpleWitness w = check_simple(pos);
  CHECK(w.flag);
  CHECK(w.end - w.begin == 1);

  const BratteliDiagram perm({make({{1}, {1}}), make({{1, 0}, {0, 1}})}, 1);
  for (std::size_t depth : {2, 5, 12}) CHECK_FALSE(check_simple(perm.expanded(depth)).flag);

  const BratteliDiagram fib({make({{1}, {1}}), make({{1, 1}, {1, 0}})}, 1);
  const SimpleWitness f = check_simple(fib.expanded(6));
  CHECK(f.flag);
  CHECK(f.end - f.begin == 2);

  // monotone in depth
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntMatrix> mats{make({{1}, {1}})};
    for (int i = 0; i < 6; ++i) mats.push_back(testing::random_matrix(rng, 2, 2, 0, 1) + identity<BigInt>(2));
    const BratteliDiagram g(mats);
    bool seen = false;
    for (std::size_t depth = 1; depth <= mats.size(); ++depth) {
      const bool now = check_simple(g.expanded(depth)).flag;
      if (seen) REQUIRE(now);
      seen = seen || now;
    }
  }
}

TEST_CASE("adapted sequences") {
  const std::vector<IntMatrix> as{make({{1}, {1}}), make({{1, 1}, {1, 2}}), make({{2, 1}, {1, 1}})};
  std::vector<RatMatrix> js{identity<Rational>(1), identity<Rational>(2), identity<Rational>(2), identity<Rational>(2)};
  const AdaptedReport rep = verify_adapted(as, js, 3);
  CHECK(rep.integral);
  CHECK(rep.strict == false);  // identity matrices are not strictly positive
  for (const auto& lv : rep.levels) {
    CHECK(lv.m_found == lv.level);
    CHECK(lv.b == to_rational(as[lv.level]));
  }

  // J = diag(2,2) on the all-ones matrix: B stays integral, A J^{-1} does not
  const IntMatrix ones2 = make({{1, 1}, {1, 1}});
  RatMatrix two = RatMatrix::Zero(2, 2);
  two(0, 0) = 2;
  two(1, 1) = 2;
  const AdaptedReport r2 = verify_adapted({make({{1}, {1}}), ones2}, {identity<Rational>(1), two, two}, 2);
  CHECK(r2.levels[1].b == to_rational(ones2));
  CHECK(r2.levels[1].b_integral);
  CHECK_FALSE(r2.levels[1].m_found.has_value());
  CHECK_FALSE(r2.integral);

  CHECK_THROWS(verify_adapted(as, js, 4));
}
