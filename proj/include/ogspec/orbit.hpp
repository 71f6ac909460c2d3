#pragma once

#include "ogspec/cf.hpp"
#include "ogspec/origami.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace ogspec {

// SL(2,Z) orbit of a primitive origami as a graph on canonical forms, with
// the T successor, the R involution, the cusp partition (T-cycles) and the
// horizontal multiplicity of every vertex. Immutable after construction.
struct OrbitGraph {
  std::vector<Origami> vertices;  // canonical forms, sorted ascending
  std::vector<int> t_succ, t_pred, r_img;
  std::vector<int> m;                    // horizontal multiplicity, 1 for the torus
  std::vector<std::vector<int>> cusps;   // T-cycles, in cycle order
  std::vector<int> cusp_of;

  int size() const { return (int)vertices.size(); }
  int squares() const { return vertices.at(0).squares(); }
  int index_of(const Origami& canonical_form) const;  // -1 if absent
  std::vector<int> cusp_widths() const;               // sorted descending
  int max_multiplicity() const;

  std::string dot() const;
  nlohmann::json to_json() const;
};

// BFS closure of the seed under T, T^-1, R on canonical forms. The seed must
// be connected and primitive (a non-primitive orbit does not stay inside a
// fixed square count).
OrbitGraph enumerate_orbit(const Origami& seed);

// All connected primitive n-square origamis with the given stratum, split
// into SL(2,Z) orbits.
std::vector<OrbitGraph> orbits_of_stratum(int n_squares, const std::vector<int>& stratum);

// The 36-element orbit of primitive 7-square H(2) origamis. Checks that the
// complement has 54 elements and throws "convention mismatch" otherwise.
OrbitGraph find_b7();

// State of the continued-fraction driven walk: the current vertex and the
// sign of the next T power (signs alternate +,-,+,... along the entries).
struct CFPathState {
  int vertex = 0;
  bool positive = true;
  bool operator==(const CFPathState&) const = default;
};

struct StepResult {
  CFPathState state;       // after consuming the entry
  std::vector<int> stops;  // the entry-many visited vertices; stops.back()
                           // is the Gauss vertex, the rest are Farey stops
};

// One entry of the walk: apply R, then T^(+-1) entry times, recording every
// intermediate vertex.
StepResult step(const OrbitGraph& g, CFPathState s, long long entry);

struct CycleNode {
  CFPathState state;       // state before consuming this entry
  int phase;               // index into the CF period
  std::vector<int> stops;  // as in StepResult
};

struct PathCycle {
  int preperiod_steps = 0;      // entries consumed before the cycle starts
  std::vector<CycleNode> nodes; // the eventual cycle
  std::vector<int> support;     // Gauss-time vertices on the cycle, sorted
};

// Eventual cycle of (walk state, CF phase). The preperiod of the expansion
// is consumed first; the cycle is detected by exact state repetition.
PathCycle path_cycle(const OrbitGraph& g, int start_vertex, const CFExpansion& cf);

// Multiplicity of a rational co-slope at a vertex, through the walk:
// m(p/q; X) = m(infinity; R g(a_1,...,a_n) X) for p/q = [a_1,...,a_n],
// extended to all of Q by T-covariance. q == 0 denotes the co-slope
// infinity (the horizontal direction).
int rational_multiplicity(const OrbitGraph& g, int start_vertex, Int p, Int q);

}  // namespace ogspec
