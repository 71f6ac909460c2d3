#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogspec/cf.hpp"

#include <random>
#include <set>

using namespace ogspec;

namespace {
CFExpansion cf(const std::string& s) { return CFExpansion::parse(s); }
const Int kE9 = 1000000000;
}  // namespace

TEST_CASE("parsing and printing") {
  CFExpansion e = cf("[1,4;(1,3)]");
  CHECK(e.preperiod == std::vector<long long>{1, 4});
  CHECK(e.period == std::vector<long long>{1, 3});
  CHECK(e.str() == "[1,4;(1,3)]");
  CHECK(cf("[;(1)]").period == std::vector<long long>{1});
  CHECK(cf("[2,3;]").is_rational());
  CHECK(cf("2+[;(1,2)]").integer_part == 2);
  CHECK_THROWS_AS(cf("nonsense"), std::invalid_argument);
}

TEST_CASE("canonical form") {
  // matching preperiod tail is absorbed, the period stays primitive
  CHECK(cf("[1,3;(1,3)]") == cf("[;(1,3)]"));
  CHECK(cf("[;(1,3,1,3)]") == cf("[;(1,3)]"));
  CHECK(cf("[4,1,3;(1,3)]") == cf("[4;(1,3)]"));
}

TEST_CASE("eval of classic values") {
  CHECK(eval_cf(cf("[;(1)]")) == QuadraticSurd(-1, 1, 5, 2));
  CHECK(eval_cf(cf("[;(3,1)]")) == QuadraticSurd(-3, 1, 21, 6));
  // 7 + 14*[(3,1)~] = 7*sqrt(21)/3
  QuadraticSurd phi1 = QuadraticSurd(7) + QuadraticSurd(14) * eval_cf(cf("[;(3,1)]"));
  CHECK(phi1 == QuadraticSurd(0, 7, 21, 3));
  // 14*[1,4,(1,4,2,4)~] = 14*(2*sqrt(210)+24)/(2*sqrt(210)+35)
  QuadraticSurd phiinf = QuadraticSurd(14) * eval_cf(cf("[1,4;(1,4,2,4)]"));
  CHECK(phiinf == QuadraticSurd(14) * QuadraticSurd(24, 2, 210, 1) /
                      QuadraticSurd(35, 2, 210, 1));
  CHECK(agrees_to(QuadraticSurd(14) * eval_cf(cf("[1;(5,2)]")),
                  "11.832159566199232", kE9));
  CHECK(eval_cf(cf("[2,3;]")) == QuadraticSurd(3, 7));
  CHECK(eval_cf(cf("3+[;]")) == QuadraticSurd(3));
  CHECK_THROWS(eval_cf(cf("[0,2;]")));
}

TEST_CASE("expansion of a surd") {
  CHECK(cf_of_surd(QuadraticSurd(-1, 1, 5, 2)) == cf("[;(1)]"));
  CHECK(cf_of_surd(QuadraticSurd(-3, 1, 21, 6)) == cf("[;(3,1)]"));
  // (7*sqrt(21)/3 - 7)/14
  QuadraticSurd x = (QuadraticSurd(0, 7, 21, 3) - QuadraticSurd(7)) / QuadraticSurd(14);
  CHECK(cf_of_surd(x) == cf("[;(3,1)]"));
  CHECK(cf_of_surd(QuadraticSurd(3, 7)) == cf("[2,3;]"));
  CHECK(cf_of_surd(QuadraticSurd(0)).is_rational());
}

TEST_CASE("round trip on random surds") {
  // |q| and r stay small: the continued fraction period grows like the
  // conductor 2|q|r, so unbounded coefficients give periods in the millions
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-1000, 1000), qc(-40, 40), den(1, 40), rad(0, 100);
  for (int t = 0; t < 300; ++t) {
    QuadraticSurd x(c(rng), qc(rng), rad(rng), den(rng));
    CAPTURE(x.str());
    CHECK(eval_cf(cf_of_surd(x)) == x);
  }
}

TEST_CASE("approximants are the Fibonacci fractions for the golden tail") {
  auto apx = approximants(cf("[;(1)]"), 5);
  REQUIRE(apx.size() == 5);
  long long fib[] = {1, 1, 2, 3, 5, 8};
  for (int k = 0; k < 5; ++k) {
    CHECK(apx[k].is_gauss);
    CHECK(apx[k].num == fib[k]);
    CHECK(apx[k].den == fib[k + 1]);
  }
}

TEST_CASE("unimodularity and the Gauss separation") {
  CFExpansion e = cf("[;(1,3)]");
  QuadraticSurd alpha = eval_cf(e);
  QuadraticSurd half(1, 2);
  Int pn = 0, qn = 0;
  bool first = true;
  for (const Approximant& a : approximants(e, 20)) {
    QuadraticSurd err =
        QuadraticSurd(a.den) * (QuadraticSurd(a.den) * alpha - QuadraticSurd(a.num));
    if (err.sign() < 0) err = -err;
    // q|q*alpha - p| < 1/2 happens only at Gauss convergents; the Farey
    // stops always exceed it (a Gauss stop followed by the entry 1 can too)
    if (err < half) CHECK(a.is_gauss);
    if (!a.is_gauss) CHECK(err > half);
    if (a.is_gauss) {
      if (!first) {
        Int det = a.den * pn - a.num * qn;
        CHECK((det == 1 || det == -1));
      }
      pn = a.num;
      qn = a.den;
      first = false;
    }
  }
}

TEST_CASE("non-approximants stay far: the two-sided bound") {
  // q|q*alpha - p| >= 1 + 2*(1/L - eps) for p/q neither Gauss nor Farey
  CFExpansion e = cf("[;(1,3)]");
  QuadraticSurd alpha = eval_cf(e);
  QuadraticSurd L = classical_lagrange(e);
  CHECK(L == QuadraticSurd::sqrt_of(21));
  QuadraticSurd bound =
      QuadraticSurd(1) + QuadraticSurd(2) * (L.inverse() - QuadraticSurd(1, 1000));
  std::set<std::pair<Int, Int>> apx;
  for (const Approximant& a : approximants(e, 30)) apx.insert({a.num, a.den});
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> qd(2, 10000);
  int checked = 0;
  while (checked < 200) {
    Int q = qd(rng);
    Int p = (QuadraticSurd(q) * alpha).floor();  // nearest candidates
    for (Int cand : {p, Int(p + 1)}) {
      Int g = boost::multiprecision::gcd(cand, q);
      Int pr = cand / g, qr = q / g;
      if (apx.count({pr, qr})) continue;
      QuadraticSurd err =
          QuadraticSurd(qr) * (QuadraticSurd(qr) * alpha - QuadraticSurd(pr));
      if (err.sign() < 0) err = -err;
      CHECK(err >= bound);
      ++checked;
    }
  }
}

TEST_CASE("renormalized quotients of the two worked loops") {
  // (1,3)~: the Gauss stop at the entry 1 is exactly sqrt(21)
  CHECK(periodic_D({1, 3}, 1, 1) == QuadraticSurd::sqrt_of(21));
  CHECK(agrees_to(periodic_D({1, 3}, 2, 3), "1.5275252316519467", kE9));
  CHECK(agrees_to(periodic_D({1, 3}, 2, 1), "0.916515138991168", kE9));
  CHECK(agrees_to(periodic_D({1, 3}, 2, 2), "0.916515138991168", kE9));
  // (5,2)~ rows
  CHECK(agrees_to(periodic_D({5, 2}, 1, 1), "0.91016612047686401", kE9));
  CHECK(agrees_to(periodic_D({5, 2}, 1, 2), "0.69600938624701365", kE9));
  CHECK(agrees_to(periodic_D({5, 2}, 1, 5) / QuadraticSurd(4), "0.5916079783099616", kE9));
  CHECK(agrees_to(periodic_D({5, 2}, 2, 1), "1.6903085094570332", kE9));
  CHECK(agrees_to(periodic_D({5, 2}, 2, 2) / QuadraticSurd(4), "1.479019945774904", kE9));
  CHECK_THROWS_AS(periodic_D({1, 3}, 1, 2), std::out_of_range);
}

TEST_CASE("classical limit values") {
  CHECK(classical_lagrange(cf("[;(1)]")) == QuadraticSurd::sqrt_of(5));
  CHECK(classical_lagrange(cf("[;(2)]")) == QuadraticSurd::sqrt_of(8));
  CHECK(classical_lagrange(cf("[;(1,3)]")) == QuadraticSurd::sqrt_of(21));
  // the preperiod does not matter
  CHECK(classical_lagrange(cf("[2,7;(1,3)]")) == QuadraticSurd::sqrt_of(21));
  CHECK_THROWS_AS(classical_lagrange(cf("[1,2;]")), std::domain_error);
}

TEST_CASE("extreme tails under an entry bound") {
  auto [lo, hi] = min_max_tail({}, 4);
  CHECK(lo == eval_cf(cf("[;(4,1)]")));
  CHECK(hi == eval_cf(cf("[;(1,4)]")));
  auto [lo1, hi1] = min_max_tail({1}, 4);  // odd prefix swaps the tails
  CHECK(lo1 == eval_cf(cf("[1;(1,4)]")));
  CHECK(hi1 == eval_cf(cf("[1;(4,1)]")));
  // exhaustive cross-check on short bounded tails
  for (const std::vector<long long>& prefix : {std::vector<long long>{}, {3}}) {
    auto [mn, mx] = min_max_tail(prefix, 2);
    std::vector<int> tail(10, 1);
    for (;;) {
      CFExpansion e;
      e.preperiod = prefix;
      for (int a : tail) e.preperiod.push_back(a);
      QuadraticSurd v = eval_cf(e);
      CHECK(mn - QuadraticSurd(1, 1000) <= v);
      CHECK(v <= mx + QuadraticSurd(1, 1000));
      int k = 9;
      while (k >= 0 && tail[k] == 2) tail[k--] = 1;
      if (k < 0) break;
      ++tail[k];
    }
  }
}
