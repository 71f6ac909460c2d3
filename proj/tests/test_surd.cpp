#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogspec/surd.hpp"

#include <random>

using namespace ogspec;

TEST_CASE("normal form") {
  QuadraticSurd x(2, 4, 8, 6);  // (2 + 4*sqrt(8))/6 = (1 + 4*sqrt(2))/3
  CHECK(x.p() == 1);
  CHECK(x.q() == 4);
  CHECK(x.d() == 2);
  CHECK(x.r() == 3);
  QuadraticSurd r(6, -4);  // -3/2
  CHECK(r.p() == -3);
  CHECK(r.r() == 2);
  CHECK(r.is_rational());
  // a perfect square radicand collapses to a rational
  QuadraticSurd s(1, 2, 9, 1);
  CHECK(s.is_rational());
  CHECK(s == QuadraticSurd(7));
}

TEST_CASE("arithmetic") {
  QuadraticSurd golden(1, 1, 5, 2);
  CHECK(golden + golden.conjugate() == QuadraticSurd(1));
  QuadraticSurd x(3, 1, 21, 6);
  CHECK(x * x.inverse() == QuadraticSurd(1));
  CHECK(x / x == QuadraticSurd(1));
  CHECK((x - x).is_zero());
  // sqrt(8) and 2*sqrt(2) are the same number
  CHECK(QuadraticSurd::sqrt_of(8) == QuadraticSurd(0, 2, 2, 1));
  // mixed-d same-field arithmetic reconciles through the square ratio
  QuadraticSurd a = QuadraticSurd::sqrt_of(2) + QuadraticSurd(0, 1, 8, 1);
  CHECK(a == QuadraticSurd(0, 3, 2, 1));
}

TEST_CASE("incompatible fields refuse arithmetic but compare fine") {
  QuadraticSurd s2 = QuadraticSurd::sqrt_of(2);
  QuadraticSurd s3 = QuadraticSurd::sqrt_of(3);
  CHECK_THROWS_AS(s2 + s3, std::domain_error);
  CHECK(QuadraticSurd::compare(s2, s3) < 0);
  CHECK(s2 < QuadraticSurd(3, 2));
  CHECK(QuadraticSurd(3, 2) < s3);
  // cross-field comparison with equal values through different radicands
  CHECK(QuadraticSurd::sqrt_of(12) == QuadraticSurd(0, 2, 3, 1));
}

TEST_CASE("floor") {
  CHECK(QuadraticSurd::sqrt_of(2).floor() == 1);
  CHECK((-QuadraticSurd::sqrt_of(2)).floor() == -2);
  CHECK(QuadraticSurd(7, 2).floor() == 3);
  CHECK(QuadraticSurd(-7, 2).floor() == -4);
  CHECK(QuadraticSurd(1, 1, 5, 2).floor() == 1);   // golden ratio
  CHECK(QuadraticSurd(-1, 1, 5, 2).floor() == 0);  // 1/golden
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(QuadraticSurd(1, 8).decimal(2) == "0.12");   // 0.125
  CHECK(QuadraticSurd(3, 8).decimal(2) == "0.38");   // 0.375
  CHECK(QuadraticSurd(-1, 8).decimal(2) == "-0.12");
  CHECK(QuadraticSurd::sqrt_of(2).decimal(6) == "1.414214");
  CHECK(QuadraticSurd(0, 7, 21, 3).decimal(6) == "10.692677");
}

TEST_CASE("string round trip") {
  QuadraticSurd x(-3, 1, 21, 6);
  CHECK(QuadraticSurd::parse(x.str()) == x);
  CHECK(QuadraticSurd::parse("(2+1*sqrt(5))/3") == QuadraticSurd(2, 1, 5, 3));
  CHECK(QuadraticSurd::parse("-7/2") == QuadraticSurd(-7, 2));
  CHECK(QuadraticSurd::parse("42") == QuadraticSurd(42));
}

TEST_CASE("random ops stay exact through the text form") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-50, 50), r(1, 30);
  const int fields[] = {2, 3, 5, 7, 10, 13};
  for (int t = 0; t < 300; ++t) {
    int d = fields[t % 6];  // one field per pair, so arithmetic stays closed
    QuadraticSurd a(c(rng), c(rng), d, r(rng));
    QuadraticSurd b(c(rng), c(rng), d, r(rng));
    QuadraticSurd sum = a + b, prod = a * b;
    CHECK(QuadraticSurd::parse(sum.str()) == sum);
    CHECK(QuadraticSurd::parse(prod.str()) == prod);
    if (!b.is_zero()) {
      QuadraticSurd quot = a / b;
      CHECK(quot * b == a);
    }
  }
}

TEST_CASE("decimal agreement helper") {
  QuadraticSurd phi2(7, 1, 21, 1);  // 11.5825756949...
  CHECK(agrees_to(phi2, "11.582576", 1000000));
  CHECK_FALSE(agrees_to(phi2, "11.582578", 1000000));
  CHECK(agrees_to(QuadraticSurd(-1, 4), "-0.25", 1000000));
}

TEST_CASE("comparison is a total order on mixed fields") {
  std::vector<QuadraticSurd> vals = {
      QuadraticSurd::sqrt_of(2),       QuadraticSurd(3, 2),
      QuadraticSurd::sqrt_of(3),       QuadraticSurd(0, 7, 21, 3),
      QuadraticSurd(1, 1, 5, 2),       QuadraticSurd(-1, 1, 5, 2),
      QuadraticSurd(24, 2, 210, 1) / QuadraticSurd(35, 2, 210, 1)};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      int ab = QuadraticSurd::compare(a, b);
      int ba = QuadraticSurd::compare(b, a);
      CHECK(ab == -ba);
      // consistency with the floating image, which is well separated here
      double fa = a.to_double(), fb = b.to_double();
      if (std::abs(fa - fb) > 1e-9) CHECK((ab < 0) == (fa < fb));
    }
}
