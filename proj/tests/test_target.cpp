#include "sadic/construct.hpp"
#include "sadic/target.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace sadic;

namespace {

// Threshold by floating scan with an exact tie check, written independently.
std::uint64_t scan_threshold(double alpha, std::uint64_t m, std::uint64_t i, std::uint64_t limit) {
  std::uint64_t t = limit;
  while (t >= 1 && static_cast<double>(i * m * m * m * t) < std::pow(static_cast<double>(t), alpha)) --t;
  return t + 1;
}

}  // namespace

TEST_CASE("target parsing") {
  CHECK(ComplexityTarget::parse("n^3/2").exceeds(7, 4));   // 7 < 8
  CHECK_FALSE(ComplexityTarget::parse("n^(3/2)").exceeds(8, 4));
  CHECK(ComplexityTarget::parse("n^1.5").exceeds(7, 4));
  CHECK(ComplexityTarget::parse("n").exceeds(4, 5));
  CHECK(ComplexityTarget::parse(" n^2 ").exceeds(24, 5));
  const ComplexityTarget nl = ComplexityTarget::parse("n*log2(n)^2");
  CHECK(nl.kind() == ComplexityTarget::Kind::NLog);
  CHECK_FALSE(nl.defined_at(1));
  CHECK(nl.exceeds(44, 5));  // 5 * 3^2 = 45
  CHECK_FALSE(nl.exceeds(45, 5));
  CHECK_THROWS(ComplexityTarget::parse("n^-1"));
  CHECK_THROWS(ComplexityTarget::parse("log(n)"));
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
}

TEST_CASE("target tables") {
  const char* path = "target_table_test.csv";
  {
    std::ofstream out(path);
    out << "n,p\n1,1\n2,4\n3,9/1\n4,16\n";
  }
  const ComplexityTarget t = ComplexityTarget::parse(std::string("@") + path);
  CHECK(t.kind() == ComplexityTarget::Kind::Table);
  CHECK(t.exceeds(8, 3));
  CHECK_FALSE(t.exceeds(9, 3));
  CHECK_FALSE(t.defined_at(5));
  CHECK(*t.horizon() == 4);
  std::remove(path);
  CHECK_THROWS(ComplexityTarget::parse("@no_such_file.csv"));
}

TEST_CASE("thresholds") {
  const ComplexityTarget p32 = ComplexityTarget::parse("n^3/2");
  CHECK(threshold(p32, 2, 1, 100000) == 65);
  CHECK(threshold(p32, 2, 2, 100000) == 257);
  CHECK(threshold(ComplexityTarget::parse("n^2"), 1, 1, 100000) == 2);
  CHECK(threshold(ComplexityTarget::parse("n^2"), 2, 3, 100000) == 25);
  CHECK_THROWS_AS(threshold(ComplexityTarget::parse("n"), 2, 1, 100000), ThresholdError);

  for (std::uint64_t m = 1; m <= 3; ++m)
    for (std::uint64_t i = 1; i <= 3; ++i) {
      REQUIRE(threshold(p32, m, i, 20000) == scan_threshold(1.5, m, i, 20000));
      REQUIRE(threshold(ComplexityTarget::parse("n^2"), m, i, 20000) == scan_threshold(2.0, m, i, 20000));
    }
}
