#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace ogspec {

using Int = boost::multiprecision::cpp_int;

// floor(sqrt(n)) for n >= 0
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);
// floor division, rounds toward -infinity
Int floor_div(const Int& a, const Int& b);

// A real quadratic surd (p + q*sqrt(d)) / r with big-integer components.
//
// Normal form: r > 0, gcd(p, q, r) = 1, d >= 0, and q = 0 forces d = 0
// (rationals embed with d = 0). Small square factors of d are pulled into q;
// large square factors may remain, so two equal values can carry different
// (d) tags. Equality and ordering are therefore decided by exact sign
// computation, never by comparing representations, and mixed-d operands are
// reconciled whenever d1*d2 is a perfect square (same real field).
//
// Every operation is exact. No floating point is used anywhere in the
// arithmetic or the comparisons; to_double() exists for display only.
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), q_(0), d_(0), r_(1) {}
  QuadraticSurd(const Int& integer) : p_(integer), q_(0), d_(0), r_(1) {}
  QuadraticSurd(long long integer) : p_(integer), q_(0), d_(0), r_(1) {}
  QuadraticSurd(const Int& num, const Int& den);  // rational num/den
  QuadraticSurd(const Int& p, const Int& q, const Int& d, const Int& r);

  static QuadraticSurd sqrt_of(const Int& d);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& d() const { return d_; }
  const Int& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  int sign() const;

  QuadraticSurd conjugate() const;  // (p - q*sqrt(d)) / r
  QuadraticSurd inverse() const;
  Int floor() const;

  QuadraticSurd operator-() const;
  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator/(const QuadraticSurd& o) const;

  // Exact three-way comparison; works across distinct quadratic fields.
  static int compare(const QuadraticSurd& a, const QuadraticSurd& b);

  bool operator==(const QuadraticSurd& o) const { return compare(*this, o) == 0; }
  bool operator!=(const QuadraticSurd& o) const { return compare(*this, o) != 0; }
  bool operator<(const QuadraticSurd& o) const { return compare(*this, o) < 0; }
  bool operator<=(const QuadraticSurd& o) const { return compare(*this, o) <= 0; }
  bool operator>(const QuadraticSurd& o) const { return compare(*this, o) > 0; }
  bool operator>=(const QuadraticSurd& o) const { return compare(*this, o) >= 0; }

  // "(p+q*sqrt(d))/r" for irrational values, "p/r" or "p" for rationals.
  std::string str() const;
  static QuadraticSurd parse(const std::string& s);

  // Decimal rendering with `digits` places after the point, round half to
  // even, computed from the exact value. The printed string is within
  // 10^-digits of the value by construction.
  std::string decimal(int digits) const;

  double to_double() const;  // display only

 private:
  void normalize();
  // Rewrites o in the field of *this when the fields coincide as subfields
  // of R; throws std::domain_error otherwise.
  static void align(QuadraticSurd& a, QuadraticSurd& b);
  static int sign_of_pair(const Int& A, const Int& B, const Int& d1,
                          const Int& C, const Int& d2);

  Int p_, q_, d_, r_;
};

// Exact rational value of a decimal literal such as "11.582576" or "-0.5".
QuadraticSurd parse_decimal(const std::string& literal);

// |x - literal| <= 1/tol_den, decided exactly.
bool agrees_to(const QuadraticSurd& x, const std::string& decimal_literal,
               const Int& tol_den);

}  // namespace ogspec
