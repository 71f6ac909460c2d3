#pragma once

#include "ogspec/surd.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ogspec {

// Continued fraction a0 + [b1,...,bm, overline(a1,...,an)]. An empty period
// means the value is rational. Entries are >= 1.
//
// Canonical form: the preperiod is as short as possible and the period is
// primitive (not a power of a shorter word). With that normalization the
// representation of a quadratic irrational is unique, so operator== is
// plain memberwise equality.
struct CFExpansion {
  long long integer_part = 0;
  std::vector<long long> preperiod;
  std::vector<long long> period;

  bool is_rational() const { return period.empty(); }
  void canonicalize();

  bool operator==(const CFExpansion& o) const = default;

  // "[1,4;(1,3)]", optionally "2+[1,4;(1,3)]"; "[2,3;]" is rational
  static CFExpansion parse(const std::string& s);
  std::string str() const;
};

// Exact value. The periodic tail is the positive fixed point of its Mobius
// map; the preperiod is applied as a Mobius prefix.
QuadraticSurd eval_cf(const CFExpansion& e);

// Exact Gauss-map iteration; the period is detected by state repetition, so
// the result is already canonical. Inverse of eval_cf.
CFExpansion cf_of_surd(const QuadraticSurd& x);

struct Approximant {
  Int num, den;
  int n;        // CF entry index, 1-based
  long long i;  // 1..a_n; i == a_n is the Gauss convergent
  bool is_gauss;
};

// Gauss convergents p_k/q_k and intermediate Farey fractions for
// k = 1..depth, from the convergent recursion.
std::vector<Approximant> approximants(const CFExpansion& e, int depth);

// The renormalized quotient 1/(q|q*alpha - p|) at cycle position n of a
// purely periodic expansion, in asymptotic mode: the backward tail is the
// purely periodic value of the reversed cyclic period. n is 1-based into
// `period`, 1 <= i <= a_n. For i == a_n this is
// [rev period from n] + a_{n+1} + [period from n+2]; for i < a_n it is
// [i, rev period from n-1] + [a_n - i, period from n+1].
QuadraticSurd periodic_D(const std::vector<long long>& period, int n, long long i);

// limsup of [a_n,...,a_1] + a_{n+1} + [a_{n+2},...]: the exact maximum of
// the asymptotic D over one period. Throws on rational input.
QuadraticSurd classical_lagrange(const CFExpansion& e);

// Exact (min, max) of [prefix, tail] over infinite tails with entries in
// 1..M. Even prefix length: min tail is overline(M,1), max is overline(1,M);
// odd length swaps them.
std::pair<QuadraticSurd, QuadraticSurd> min_max_tail(
    const std::vector<long long>& prefix, long long M);

}  // namespace ogspec
