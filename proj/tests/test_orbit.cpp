#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogspec/orbit.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <set>

using namespace ogspec;

namespace {
const OrbitGraph& b7() {
  static OrbitGraph g = find_b7();
  return g;
}
}  // namespace

TEST_CASE("torus orbit") {
  OrbitGraph g = enumerate_orbit(Origami::torus());
  CHECK(g.size() == 1);
  CHECK(g.cusp_widths() == std::vector<int>{1});
  CHECK(g.max_multiplicity() == 1);
}

TEST_CASE("non-primitive seeds are refused") {
  Origami cover(Permutation::from_cycles("(1,2)", 2), Permutation(2));
  CHECK_THROWS_AS(enumerate_orbit(cover), std::domain_error);
}

TEST_CASE("the three-square H(2) orbit") {
  std::vector<OrbitGraph> orbits = orbits_of_stratum(3, {2});
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 3);
  CHECK(orbits[0].cusp_widths() == std::vector<int>{2, 1});
  CHECK(orbits[0].max_multiplicity() == 1);
}

TEST_CASE("orbit B7 combinatorics") {
  const OrbitGraph& g = b7();
  CHECK(g.size() == 36);
  CHECK(g.cusps.size() == 8);
  CHECK(g.cusp_widths() == std::vector<int>{7, 7, 7, 5, 3, 3, 3, 1});
  CHECK(g.max_multiplicity() == 2);
  int m2_cusp = -1;
  int m2_count = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (g.m[i] == 2) {
      ++m2_count;
      if (m2_cusp < 0) m2_cusp = g.cusp_of[i];
      CHECK(g.cusp_of[i] == m2_cusp);
    }
  }
  CHECK(m2_count == 7);
  CHECK(g.cusps[m2_cusp].size() == 7);
  for (const Origami& o : g.vertices) {
    CHECK(o.stratum() == std::vector<int>{2});
    CHECK(o.is_primitive());
  }
}

TEST_CASE("the action closes projectively") {
  const OrbitGraph& g = b7();
  for (int i = 0; i < g.size(); ++i) {
    CHECK(g.r_img[g.r_img[i]] == i);  // R^2 acts as the identity
    CHECK(g.t_pred[g.t_succ[i]] == i);
    // T to the cusp width fixes the vertex
    int v = i;
    for (size_t k = 0; k < g.cusps[g.cusp_of[i]].size(); ++k) v = g.t_succ[v];
    CHECK(v == i);
  }
}

TEST_CASE("enumeration is order independent") {
  const OrbitGraph& g = b7();
  for (int s = 0; s < g.size(); s += 5) {
    OrbitGraph h = enumerate_orbit(g.vertices[s]);
    CHECK(h.vertices == g.vertices);
    CHECK(h.t_succ == g.t_succ);
    CHECK(h.r_img == g.r_img);
  }
}

TEST_CASE("walk steps") {
  const OrbitGraph& g = b7();
  CFPathState s{0, true};
  StepResult r = step(g, s, 1);
  CHECK(r.stops.size() == 1);
  CHECK(r.stops[0] == g.t_succ[g.r_img[0]]);  // Gauss vertex is T R X
  CHECK_FALSE(r.state.positive);
  StepResult r3 = step(g, r.state, 3);
  CHECK(r3.stops.size() == 3);
  CHECK(r3.state.positive);
  CHECK(r3.stops[0] == g.t_pred[g.r_img[r.state.vertex]]);
}

TEST_CASE("the worked loops close in the multiplicity-2 cusp") {
  const OrbitGraph& g = b7();
  auto closes = [&](int s, std::vector<long long> period) {
    CFPathState st{s, true};
    for (long long a : period) st = step(g, st, a).state;
    return st.vertex == s && st.positive;
  };
  int found13 = 0, found52 = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (g.m[s] != 2) continue;
    if (closes(s, {1, 3})) ++found13;
    if (closes(s, {5, 2})) ++found52;
  }
  CHECK(found13 >= 1);
  CHECK(found52 >= 1);
}

TEST_CASE("path cycles") {
  OrbitGraph torus = enumerate_orbit(Origami::torus());
  PathCycle pc = path_cycle(torus, 0, CFExpansion::parse("[2;(3,1)]"));
  CHECK(pc.nodes.size() == 2);  // one vertex: the cycle is the CF period
  CHECK(pc.support == std::vector<int>{0});

  const OrbitGraph& g = b7();
  CFExpansion alpha = CFExpansion::parse("[;(1,4,2,4)]");
  for (int s = 0; s < g.size(); ++s) {
    PathCycle cyc = path_cycle(g, s, alpha);
    CHECK(!cyc.nodes.empty());
    CHECK(cyc.nodes.size() % alpha.period.size() == 0);
    // restarting inside the cycle reproduces it up to rotation
    const CycleNode& n0 = cyc.nodes[0];
    CFExpansion rotated = alpha;
    std::rotate(rotated.period.begin(), rotated.period.begin() + n0.phase,
                rotated.period.end());
    if (n0.state.positive) {
      PathCycle again = path_cycle(g, n0.state.vertex, rotated);
      CHECK(again.preperiod_steps == 0);
      CHECK(again.nodes.size() == cyc.nodes.size());
    }
  }
  CHECK_THROWS_AS(path_cycle(g, 0, CFExpansion::parse("[1,2;]")), std::domain_error);
}

TEST_CASE("rational multiplicity is covariant") {
  const OrbitGraph& g = b7();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pd(-40, 40), qd(1, 40), vd(0, g.size() - 1);
  for (int t = 0; t < 400; ++t) {
    Int p = pd(rng), q = qd(rng);
    int v = vd(rng);
    int base = rational_multiplicity(g, v, p, q);
    CHECK((base == 1 || base == 2));
    // T: x -> x+1 on co-slopes
    CHECK(rational_multiplicity(g, g.t_succ[v], p + q, q) == base);
    // T^-1: x -> x-1
    CHECK(rational_multiplicity(g, g.t_pred[v], p - q, q) == base);
    // R: x -> -1/x
    CHECK(rational_multiplicity(g, g.r_img[v], -q, p) == base);
  }
  // the horizontal direction
  for (int v = 0; v < g.size(); ++v)
    CHECK(rational_multiplicity(g, v, 1, 0) == g.m[v]);
}

TEST_CASE("graph exports") {
  const OrbitGraph& g = b7();
  std::string dot = g.dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  nlohmann::json j = g.to_json();
  CHECK(j["squares"] == 7);
  CHECK(j["vertices"].size() == 36);
  CHECK(Origami::from_json(j["vertices"][0]) == g.vertices[0]);
}
