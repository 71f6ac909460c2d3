#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogspec/origami.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>

using namespace ogspec;

namespace {

Origami l_origami() { return Origami::parse("h=(1,2)(3) v=(1,3)(2)"); }

Origami conjugate(const Origami& o, const Permutation& s) {
  Permutation si = s.inverse();
  return Origami(si.then(o.h()).then(s), si.then(o.v()).then(s));
}

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  Permutation p = Permutation::from_cycles("(1,2,3)", 3);
  Permutation q = Permutation::from_cycles("(1,2)", 3);
  CHECK(p.then(q).one_based() == std::vector<int>{1, 3, 2});
  CHECK(q.then(p).one_based() == std::vector<int>{3, 2, 1});
  CHECK((p * q).one_based() == p.then(q).one_based());
  CHECK(p.then(p.inverse()) == Permutation(3));
}

TEST_CASE("text and JSON round trips") {
  Origami o = l_origami();
  CHECK(o.squares() == 3);
  CHECK(Origami::parse(o.text()) == o);
  CHECK(Origami::from_json(o.to_json()) == o);
  CHECK(Origami::parse("h = (1, 2) (3)   v=(1,3)(2)") == o);
  CHECK_THROWS_AS(Origami::parse("h=(1,2)"), std::invalid_argument);
}

TEST_CASE("canonical form") {
  Origami torus = Origami::torus();
  CHECK(torus.canonical() == torus);
  Origami o = l_origami();
  Origami c = o.canonical();
  CHECK(c.canonical() == c);  // idempotent
  // constant on the conjugation class, exhaustively for small n
  std::vector<int> img{0, 1, 2};
  do {
    Origami conj = conjugate(o, Permutation(std::vector<int>(img)));
    CHECK(conj.canonical() == c);
  } while (std::next_permutation(img.begin(), img.end()));
  // random conjugations at larger size
  std::mt19937 rng(5);
  Origami big = Origami::parse("h=(1,2,3,4,5)(6,7)(8) v=(1,6)(2,8)(3)(4)(5,7)");
  REQUIRE(big.connected());
  Origami cb = big.canonical();
  for (int t = 0; t < 50; ++t)
    CHECK(conjugate(big, random_perm(8, rng)).canonical() == cb);
}

TEST_CASE("disconnected input is rejected") {
  Origami d(Permutation::from_cycles("(1,2)", 4), Permutation::from_cycles("(3,4)", 4));
  CHECK_FALSE(d.connected());
  CHECK_THROWS_WITH_AS(d.canonical(), "not connected", std::domain_error);
}

TEST_CASE("stratum and genus") {
  CHECK(Origami::torus().stratum().empty());
  CHECK(Origami::torus().genus() == 1);
  CHECK(l_origami().stratum() == std::vector<int>{2});
  CHECK(l_origami().genus() == 2);
}

TEST_CASE("absolute period lattice") {
  auto id = Origami::torus().absolute_period_lattice();
  CHECK(id == std::array<std::array<long long, 2>, 2>{{{1, 0}, {0, 1}}});
  // double cover of the torus: index two sublattice
  Origami cover(Permutation::from_cycles("(1,2)", 2), Permutation(2));
  auto lat = cover.absolute_period_lattice();
  CHECK(lat == std::array<std::array<long long, 2>, 2>{{{2, 0}, {0, 1}}});
  CHECK_FALSE(cover.is_primitive());
  CHECK(l_origami().is_primitive());
  CHECK(Origami::torus().is_primitive());
}

TEST_CASE("generator action") {
  Origami torus = Origami::torus();
  CHECK(torus.act({GL2Letter::T}) == torus);
  CHECK(torus.act({GL2Letter::R}) == torus);
  Origami o = l_origami().canonical();
  CHECK(o.act({GL2Letter::T, GL2Letter::TInv}) == o);
  CHECK(o.act({GL2Letter::TInv, GL2Letter::T}) == o);
  CHECK(o.act({}) == o);
}

TEST_CASE("invariance of the geometric quantities under relabeling") {
  std::mt19937 rng(17);
  Origami o = Origami::parse("h=(1,2,3,4,5,6,7) v=(1,4)(2)(3)(5)(6)(7)");
  REQUIRE(o.connected());
  auto strat = o.stratum();
  bool prim = o.is_primitive();
  for (int t = 0; t < 30; ++t) {
    Origami conj = conjugate(o, random_perm(7, rng));
    CHECK(conj.stratum() == strat);
    CHECK(conj.is_primitive() == prim);
    if (!strat.empty())
      CHECK(conj.horizontal_multiplicity() == o.horizontal_multiplicity());
  }
}

TEST_CASE("horizontal multiplicity") {
  CHECK(l_origami().horizontal_multiplicity() == 1);
  CHECK_THROWS_WITH_AS(Origami::torus().horizontal_multiplicity(),
                       "no saddle connections", std::domain_error);
}
