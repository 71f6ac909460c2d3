#pragma once

#include "ogspec/orbit.hpp"
#include "ogspec/surd.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ogspec {

// Finite word over the alphabet {a, b}, where the letter a stands for the
// continued-fraction block 1,4,2,4 and b for 1,3.
struct ABWord {
  std::string letters;

  static ABWord parse(const std::string& text);  // "aab^3a" exponent sugar
  std::string str() const { return letters; }
  int count(char c) const;
  bool has_a() const { return count('a') > 0; }
  bool has_b() const { return count('b') > 0; }

  bool operator==(const ABWord&) const = default;
};

// CF entries of the word: a -> 1,4,2,4 and b -> 1,3.
std::vector<long long> expand(const ABWord& w);

// L^sigma of the periodic sequence w^infinity: 7 * max over the positions
// carrying the letter a of [1,4, forward letters] + [1,4, backward letters],
// both tails purely periodic. Throws for all-b words (not in the subshift
// domain).
QuadraticSurd l_sigma_periodic(const ABWord& w);

// Word overline(v^inf u v^inf): u isolated inside longer and longer blocks
// of v.
struct LimitWordSpec {
  ABWord u, v;
};

// L^sigma of the limit word, from the closed forms with the parity split on
// the longest a-run. Supported shapes: u = a^k or u = a^k b^n a, with v = b.
QuadraticSurd l_sigma_limit(const LimitWordSpec& s);

// Direct evaluation of the same limit: max over the a-positions of u of the
// two tails read inside b^inf u b^inf. Test oracle for l_sigma_limit.
QuadraticSurd l_sigma_limit_direct(const ABWord& u);

struct Gap {
  QuadraticSurd left, right;  // open interval, left < right
  int generation;             // 1 or 2
  long long k, n;             // n = 0 for generation 1
};

// G_0 = (phi_1, phi_2); G_k = (L^sigma((b a^k)^inf),
// L^sigma(overline(b^inf a^(k+1) b^inf))) for k >= 1.
Gap gap_first(long long k);

// G_{k,n} = (L^sigma((a^k b^(n+1))^inf),
// L^sigma(overline(b^inf a^k b^n a b^inf))) for k, n >= 1.
Gap gap_second(long long k, long long n);

// closed interval I_k of the first generation:
// [L^sigma(overline(b^inf a^k b^inf)), L^sigma((b a^k)^inf)]
std::pair<QuadraticSurd, QuadraticSurd> first_generation_interval(long long k);

// Longest a-run of the cyclic word w^infinity. Throws for all-b words and
// for all-a words (run unbounded).
long long kappa(const ABWord& w);

// Minimal n such that a,b^n,a^k or a^k,b^n,a occurs in the cyclic word,
// where k = kappa(w); nullopt when the pattern never occurs (all-a words).
std::optional<long long> nu(const ABWord& w);

struct LexCheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

// Exact checks of the lexicographic-order toolkit: the two comparison
// inequalities, their four reference decimals at 1e-8, the min/max
// separation [1,4,u,b,...] < [1,4,u,a,...] for random finite words u, and a
// centering instance.
std::vector<LexCheckItem> verify_lexicographic(std::mt19937& rng, int random_words);

struct SubshiftOrbitReport {
  int vertex = -1;  // realizing vertex in the multiplicity-2 cusp
  QuadraticSurd orbit_value, subshift_value;
  bool equal = false;
};

// Realizes alpha = [overline(expand(w))] as an even loop based in the
// multiplicity-2 cusp of the orbit and compares the exact orbit value with
// L^sigma(w). Requires L^sigma(w) below eta_1; throws when no vertex of the
// cusp closes the loop.
SubshiftOrbitReport subshift_vs_orbit(const OrbitGraph& b7, const ABWord& w);

// the named threshold constants of the reduction
QuadraticSurd phi_1();
QuadraticSurd phi_2();
QuadraticSurd phi_inf();
QuadraticSurd eta_1();
QuadraticSurd eta_2();
QuadraticSurd eta_3();

}  // namespace ogspec
