#include "sadic/construct.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace sadic;
using testing::make;

namespace {

BratteliDiagram main1_input() { return BratteliDiagram({make({{1}, {1}}), make({{3, 1}, {1, 3}})}, 1); }
BratteliDiagram toeplitz_input() { return BratteliDiagram({make({{1}, {1}}), make({{1, 1}, {1, 2}})}, 1); }

IntMatrix power(const IntMatrix& m, int e) {
  IntMatrix p = identity<BigInt>(m.rows());
  for (int k = 0; k < e; ++k) p = testing::naive_mul(m, p);
  return p;
}

}  // namespace

TEST_CASE("adapted J matrices") {
  const RatMatrix j = adapted_j(1, 2);
  CHECK(j == to_rational(make({{2, 0}, {2, 1}})));
  const RatMatrix j2 = adapted_j(2, 5);
  CHECK(mat_mul(j2, invert_rational(j2)) == identity<Rational>(4));
}

TEST_CASE("main1 on the sample diagram") {
  const ComplexityTarget target = ComplexityTarget::parse("n^3/2");
  const ConstructionResult res = build_main1(main1_input(), target, 4);
  REQUIRE_FALSE(res.failed);

  CHECK(res.h.at(0) == 3);
  CHECK(res.h.at(1) == 66);
  CHECK(res.h.at(2) == 258);
  CHECK(res.h.at(3) == 578);
  CHECK(res.t.at(1) == 65);
  CHECK(res.t.at(2) == 257);
  CHECK(res.t.at(3) == 577);

  const IntMatrix m = make({{3, 1}, {1, 3}});
  CHECK(res.a[0] == testing::naive_mul(power(m, 2), make({{1}, {1}})));
  CHECK(res.a[1] == power(m, 7));
  CHECK(res.a[2] == power(m, 9));
  CHECK(res.a[3] == power(m, 10));
  CHECK(res.cuts == std::vector<std::size_t>{0, 3, 10, 19, 29});

  CHECK(res.final[0] == make({{3}, {4}}));
  CHECK(res.final[1] == make({{264, 66}, {268, 67}, {264, 66}, {268, 67}}));
  CHECK(res.final_diagram.level_sizes() == std::vector<std::size_t>{1, 2, 4, 4, 4});

  LengthTable lengths(res.sequence);
  CHECK(lengths.min_length(1) == 3);
  CHECK(lengths.min_length(2) == 1056);

  // choice of h_i, recomputed from the stored matrices
  for (std::size_t i = 0; i < res.depth; ++i) {
    const BigInt h = res.h.at(i);
    REQUIRE(h * h + h < min_entry(res.a[i]));
    REQUIRE_FALSE(is_divisible(res.a[i], h));
    for (Eigen::Index r = 0; r < res.a[i].rows(); ++r)
      for (Eigen::Index c = 0; c < res.a[i].cols(); ++c) REQUIRE(res.a[i](r, c) % h != 0);
    if (i > 0) {
      REQUIRE(h > res.t.at(i));
      REQUIRE(h > BigInt(2 * res.a[i - 1].cols()));
    }
  }

  // A''_i rows are (h_i + e) (Q - R, R) with Q, R from A_{i-1} divided by h_{i-1}
  for (std::size_t i = 1; i < res.depth; ++i) {
    const IntMatrix& prev = res.a[i - 1];
    const BigInt d = res.h.at(i - 1);
    const IntMatrix& f = res.final[i];
    REQUIRE(f.rows() == 2 * prev.rows());
    for (Eigen::Index k = 0; k < prev.rows(); ++k)
      for (Eigen::Index j = 0; j < prev.cols(); ++j) {
        const BigInt q = prev(k, j) / d, r = prev(k, j) % d;
        for (int e = 0; e < 2; ++e) {
          REQUIRE(f(2 * k + e, 2 * j) == (res.h.at(i) + e) * (q - r));
          REQUIRE(f(2 * k + e, 2 * j + 1) == (res.h.at(i) + e) * r);
        }
      }
  }

  // the remark <tau_[0,i)> >= h_{i+1} is advisory and already fails at i = 1
  bool advisory_seen = false;
  for (const auto& d : res.diagnostics) {
    if (d.condition == "<tau_[0,i)> >= h_{i+1}" && d.level == 1) {
      advisory_seen = true;
      CHECK_FALSE(d.pass);
      CHECK_FALSE(d.gating);
    }
  }
  CHECK(advisory_seen);
  CHECK(res.first_violation() == nullptr);
}

TEST_CASE("main1 verification") {
  const ComplexityTarget target = ComplexityTarget::parse("n^3/2");
  const std::uint64_t n_max = 5000;
  ConstructionResult res = build_main1(main1_input(), target, 3);
  const auto need = verification_depth(res.sequence, n_max);
  REQUIRE(need.has_value());
  res = build_main1(main1_input(), target, *need);
  const VerificationReport rep = verify_construction(res, target, n_max);
  for (const auto& c : rep.checks) CHECK_MESSAGE((c.pass || !c.gating), c.name << ": " << c.detail);
  CHECK(rep.pass);
  for (const char* name : {"splitting intertwining", "adapted intertwining", "adapted condition (1)",
                           "adapted condition (2)", "complexity bound", "coarse bound", "profile stabilized",
                           "marker property", "unique decoding"}) {
    const Check* c = rep.find(name);
    REQUIRE(c != nullptr);
    CHECK_MESSAGE(c->pass, name);
  }
  REQUIRE(rep.find("marker exception (two-letter codomain)") != nullptr);

  // the bound at a level with |A_i| = |A_{i+1}| = 4 and r-comp 20 is 104 n
  BoundEvaluator ev(res.sequence);
  REQUIRE(res.sequence.alphabet_size(2) == 4);
  REQUIRE(res.sequence.alphabet_size(3) == 4);
  REQUIRE(r_comp(res.sequence[2]) == 20);
  const std::uint64_t n = ev.max_len(2).convert_to<std::uint64_t>();
  const BoundValue b = ev.at(n);
  CHECK(b.level == 2);
  CHECK(b.regime == Regime::I);
  CHECK(b.bound == BigInt(104) * n);
  CHECK(b.coarse == BigInt(3 * 64) * n);
}

TEST_CASE("main1 failures") {
  const ConstructionResult res = build_main1(main1_input(), ComplexityTarget::parse("n"), 4);
  CHECK(res.failed);
  REQUIRE(res.first_violation() != nullptr);
  CHECK(res.first_violation()->condition == "threshold t_i");
  CHECK(res.failure.find("threshold") != std::string::npos);
  const VerificationReport rep = verify_construction(res, ComplexityTarget::parse("n"), 100);
  CHECK(rep.skipped);
  CHECK_FALSE(rep.pass);

  const BratteliDiagram perm({make({{1}, {1}}), make({{1, 0}, {0, 1}})}, 1);
  CHECK_THROWS_AS(build_main1(perm, ComplexityTarget::parse("n^2"), 3), std::invalid_argument);
  CHECK_THROWS(build_main1(main1_input(), ComplexityTarget::parse("n^2"), 0));

  ConstructionOptions tight;
  tight.horizon = 3;
  const ConstructionResult short_run = build_main1(main1_input(), ComplexityTarget::parse("n^3/2"), 4, tight);
  CHECK(short_run.failed);
  CHECK(short_run.first_violation()->condition == "telescoping horizon");
}

TEST_CASE("presplit") {
  const PresplitResult s = presplit_divisible({make({{2}}), make({{3}})});
  CHECK_FALSE(s.unchanged);
  CHECK(s.tilde[0] == make({{1}, {1}}));
  CHECK(s.b[0] == make({{1, 1}}));
  CHECK(s.tilde[1] == make({{1, 1}, {1, 1}}));
  CHECK(testing::naive_mul(s.b[0], s.c[0]) == make({{2}}));

  const std::vector<IntMatrix> ready{make({{1}, {1}}), make({{1, 1}, {1, 2}})};
  const PresplitResult u = presplit_divisible(ready);
  CHECK(u.unchanged);
  CHECK(u.tilde == ready);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntMatrix> seq;
    Eigen::Index cols = 1;
    for (int i = 0; i < 5; ++i) {
      const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 3);
      seq.push_back(testing::random_matrix(rng, rows, cols, 2, 9));
      cols = rows;
    }
    const PresplitResult p = presplit_divisible(seq);
    REQUIRE(p.tilde[0].rows() == 2);
    IntMatrix lhs = seq[0], chain = p.tilde[0];
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) {
        lhs = testing::naive_mul(seq[i], lhs);
        chain = testing::naive_mul(p.tilde[i], chain);
      }
      REQUIRE(p.tilde[i].rows() >= 2);
      REQUIRE(testing::naive_mul(p.b[i], p.c[i]) == seq[i]);
      REQUIRE(testing::naive_mul(p.b[i], chain) == lhs);
    }
  }
}

TEST_CASE("Toeplitz pipeline on the sample diagram") {
  const ComplexityTarget target = ComplexityTarget::parse("n^2");
  const ConstructionResult res = build_toeplitz(toeplitz_input(), target, 5);
  REQUIRE_FALSE(res.failed);
  CHECK(res.s.at(2) == 6);
  CHECK(res.ell.at(2) == 3);
  CHECK(res.k.at(2) == 36);
  CHECK(res.k.at(3) == 60);
  CHECK(res.k.at(4) == 1092);
  CHECK(res.t.at(2) == 25);
  const BigInt l = res.ell.at(2);
  CHECK(res.final[1] == make({{6, 6}, {4, 8}}) * l);
  CHECK(res.final[2] == make({{24, 36}, {15, 45}}));

  BigInt big_k = 1;
  LengthTable lengths(res.sequence);
  for (std::size_t i = 1; i <= res.depth; ++i) {
    big_k *= res.k.at(i);
    // equal row sums make every image of tau_[0,i) the same length
    REQUIRE(lengths.min_length(i) == big_k);
    REQUIRE(lengths.max_length(i) == big_k);
  }
  for (std::size_t i = 0; i < res.depth; ++i) {
    const IntMatrix& b = res.final[i];
    const IntMatrix sums = testing::naive_mul(b, IntMatrix(IntMatrix::Constant(b.cols(), 1, BigInt(1))));
    REQUIRE((sums.array() == res.k.at(i + 1)).all());
    if (i >= 1) {
      REQUIRE(is_divisible(b, BigInt(i + 1)));
      REQUIRE(min_entry(b) > BigInt(b.rows()));
      REQUIRE(res.k.at(i + 1) > res.t.at(i + 1));
    }
    // B_{i} = J_{i+1} A_{i} J_{i}^{-1}
    REQUIRE(to_rational(b) == mat_mul(mat_mul(res.j[i + 1], to_rational(res.a_prime[i])), invert_rational(res.j[i])));
  }
}

TEST_CASE("Toeplitz verification and failures") {
  const ComplexityTarget target = ComplexityTarget::parse("n^2");
  ConstructionResult res = build_toeplitz(toeplitz_input(), target, 4);
  const auto need = verification_depth(res.sequence, 3000);
  REQUIRE(need.has_value());
  res = build_toeplitz(toeplitz_input(), target, *need);
  VerifyOptions opts;
  opts.toeplitz_window = 3000;
  const VerificationReport rep = verify_construction(res, target, 3000, opts);
  for (const auto& c : rep.checks) CHECK_MESSAGE((c.pass || !c.gating), c.name << ": " << c.detail);
  CHECK(rep.pass);
  REQUIRE(rep.toeplitz.has_value());
  CHECK(rep.toeplitz->refuted == 0);
  CHECK(rep.toeplitz_candidates.front() == 36);

  const BratteliDiagram zero({make({{1}, {1}}), make({{1, 0}, {1, 2}})}, 1);
  CHECK_THROWS_AS(build_toeplitz(zero, target, 3), std::invalid_argument);
  CHECK(build_toeplitz(toeplitz_input(), ComplexityTarget::parse("n"), 3).failed);

  // singleton levels are telescoped until the split halves are positive
  const BratteliDiagram single({make({{1}}), make({{1}}), make({{3}})}, 2);
  const ConstructionResult s = build_toeplitz(single, target, 3);
  CHECK_FALSE(s.failed);
  CHECK(s.a[0] == make({{3}}));
}
