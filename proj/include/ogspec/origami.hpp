#pragma once

#include "ogspec/permutation.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <string>
#include <vector>

namespace ogspec {

enum class GL2Letter { T, TInv, R };

// Square-tiled surface given by the right-neighbor permutation h and the
// upper-neighbor permutation v on squares 1..n. Immutable value type.
//
// Generator action (validated against the known orbit invariants, see the
// orbit tests): T.(h,v) = (h, v h^-1) and R.(h,v) = (v, h^-1), products
// applied left factor first. The corner monodromy is c = h v h^-1 v^-1.
class Origami {
 public:
  Origami(Permutation h, Permutation v);

  static Origami torus();
  // "h=(1,2)(3) v=(1,3)(2)", whitespace-insensitive; n is the largest index
  static Origami parse(const std::string& text);
  static Origami from_json(const nlohmann::json& j);

  int squares() const { return h_.degree(); }
  const Permutation& h() const { return h_; }
  const Permutation& v() const { return v_; }

  bool connected() const;

  // Lexicographically minimal relabeling over BFS orders started from every
  // square with edge order (h, v). Two origamis describe the same surface
  // iff their canonical forms are identical. Throws on disconnected input.
  Origami canonical() const;

  // Orders of the zeros: each corner-monodromy cycle of length l >= 2
  // contributes l-1. Empty for the torus.
  std::vector<int> stratum() const;
  int genus() const;

  // Sublattice of Z^2 generated by the cycle holonomies of the square
  // adjacency graph (h edges (1,0), v edges (0,1)); rows of the Hermite
  // normal form [[a,b],[0,d]].
  std::array<std::array<long long, 2>, 2> absolute_period_lattice() const;
  bool is_primitive() const;

  Origami acted(GL2Letter g) const;  // single generator, not canonicalized
  // applies the word left to right, then canonicalizes
  Origami act(const std::vector<GL2Letter>& word) const;

  // Shortest horizontal saddle connection measured in squares: the minimal
  // h-distance between squares whose lower-left corner is singular. Throws
  // for surfaces without singularities.
  int horizontal_multiplicity() const;

  std::string text() const;
  nlohmann::json to_json() const;

  bool operator==(const Origami& o) const { return h_ == o.h_ && v_ == o.v_; }
  bool operator<(const Origami& o) const;

 private:
  Permutation h_, v_;
};

}  // namespace ogspec
