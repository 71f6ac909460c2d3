#include "ogspec/surd.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ogspec {

namespace {

constexpr std::array<int, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

Int gcd3(const Int& a, const Int& b, const Int& c) {
  return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

// decimal integer literal, tolerating a leading sign and leading zeros
Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  size_t k = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    k = 1;
  }
  Int out = 0;
  bool any = false;
  for (; k < s.size(); ++k) {
    if (!isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad integer literal: " + s);
    out = out * 10 + (s[k] - '0');
    any = true;
  }
  if (!any) throw std::invalid_argument("bad integer literal: " + s);
  return neg ? Int(-out) : out;
}

}  // namespace

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

QuadraticSurd::QuadraticSurd(const Int& num, const Int& den)
    : p_(num), q_(0), d_(0), r_(den) {
  if (den == 0) throw std::domain_error("zero denominator");
  normalize();
}

QuadraticSurd::QuadraticSurd(const Int& p, const Int& q, const Int& d, const Int& r)
    : p_(p), q_(q), d_(d), r_(r) {
  if (r == 0) throw std::domain_error("zero denominator");
  if (d < 0) throw std::domain_error("negative radicand");
  normalize();
}

QuadraticSurd QuadraticSurd::sqrt_of(const Int& d) {
  return QuadraticSurd(0, 1, d, 1);
}

void QuadraticSurd::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else {
    for (int pr : kSmallPrimes) {
      Int sq = Int(pr) * pr;
      while (d_ % sq == 0) {
        d_ /= sq;
        q_ *= pr;
      }
    }
    Int s;
    if (is_perfect_square(d_, &s)) {
      p_ += q_ * s;
      q_ = 0;
      d_ = 0;
    }
  }
  Int g = gcd3(abs(p_), abs(q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

int QuadraticSurd::sign() const {
  // sign of p + q*sqrt(d); r > 0 never changes it
  int sp = p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
  int sq = q_ == 0 ? 0 : (q_ > 0 ? 1 : -1);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: |p| vs |q|*sqrt(d); d is not a perfect square here
  return p_ * p_ > q_ * q_ * d_ ? sp : sq;
}

QuadraticSurd QuadraticSurd::conjugate() const {
  return QuadraticSurd(p_, -q_, d_, r_);
}

QuadraticSurd QuadraticSurd::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (q_ == 0) return QuadraticSurd(r_, p_);
  Int norm = p_ * p_ - q_ * q_ * d_;  // nonzero: d is not a square
  return QuadraticSurd(r_ * p_, -r_ * q_, d_, norm);
}

Int QuadraticSurd::floor() const {
  // bracket q*sqrt(d) between consecutive integers; the numerator then lies
  // in [p+s, p+s+1) and no multiple of r sits strictly inside, so the floor
  // of the quotient is floor_div(p+s, r)
  Int s = 0;
  if (q_ > 0) {
    s = isqrt_floor(q_ * q_ * d_);
  } else if (q_ < 0) {
    s = -isqrt_floor(q_ * q_ * d_) - 1;
  }
  return floor_div(p_ + s, r_);
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-p_, -q_, d_, r_);
}

void QuadraticSurd::align(QuadraticSurd& a, QuadraticSurd& b) {
  if (a.q_ == 0 && b.q_ == 0) return;
  if (a.q_ == 0) {
    a.d_ = b.d_;
    return;
  }
  if (b.q_ == 0) {
    b.d_ = a.d_;
    return;
  }
  if (a.d_ == b.d_) return;
  Int s;
  if (is_perfect_square(a.d_ * b.d_, &s)) {
    // sqrt(b.d) = (s/a.d) * sqrt(a.d) with s/a.d rational
    b = QuadraticSurd(b.p_ * a.d_, b.q_ * s, a.d_, b.r_ * a.d_);
    b.d_ = a.d_;  // normalize() may have re-split the square part
    return;
  }
  throw std::domain_error("incompatible fields: sqrt(" + a.d_.str() +
                          ") vs sqrt(" + b.d_.str() + ")");
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  QuadraticSurd a = *this, b = o;
  align(a, b);
  return QuadraticSurd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_,
                       a.q_ == 0 && b.q_ == 0 ? Int(0) : a.d_, a.r_ * b.r_);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
  return *this + (-o);
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  QuadraticSurd a = *this, b = o;
  align(a, b);
  return QuadraticSurd(a.p_ * b.p_ + a.q_ * b.q_ * a.d_,
                       a.p_ * b.q_ + a.q_ * b.p_,
                       a.q_ == 0 && b.q_ == 0 ? Int(0) : a.d_, a.r_ * b.r_);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
  return *this * o.inverse();
}

int QuadraticSurd::sign_of_pair(const Int& A, const Int& B, const Int& d1,
                                const Int& C, const Int& d2) {
  // sign of A + B*sqrt(d1) + C*sqrt(d2), where Q(sqrt(d1)) and Q(sqrt(d2))
  // are genuinely distinct fields
  QuadraticSurd u(A, B, d1, 1);
  QuadraticSurd w(0, C, d2, 1);
  int su = u.sign(), sw = w.sign();
  if (su == 0) return sw;
  if (sw == 0) return su;
  if (su == sw) return su;
  // opposite signs: decide by |u| vs |w| via squaring; u^2 - w^2 lives in
  // Q(sqrt(d1)) because w^2 is rational
  QuadraticSurd u2(A * A + B * B * d1, 2 * A * B, d1, 1);
  QuadraticSurd w2(C * C * d2);
  int st = (u2 - w2).sign();
  return su > 0 ? st : -st;
}

int QuadraticSurd::compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  bool same_field = a.q_ == 0 || b.q_ == 0 || a.d_ == b.d_ ||
                    is_perfect_square(a.d_ * b.d_);
  if (same_field) return (a - b).sign();
  return sign_of_pair(a.p_ * b.r_ - b.p_ * a.r_, a.q_ * b.r_, a.d_,
                      -b.q_ * a.r_, b.d_);
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
    if (r_ != 1) os << "/" << r_;
    return os.str();
  }
  os << "(" << p_ << (q_ > 0 ? "+" : "-") << abs(q_) << "*sqrt(" << d_ << "))";
  if (r_ != 1) os << "/" << r_;
  return os.str();
}

QuadraticSurd QuadraticSurd::parse(const std::string& s) {
  // accepts the output of str(): p, p/r, (p+q*sqrt(d))/r, (p-q*sqrt(d))/r
  auto fail = [&]() -> QuadraticSurd {
    throw std::invalid_argument("cannot parse surd: " + s);
  };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) return fail();
  if (t[0] != '(') {
    auto slash = t.find('/');
    if (slash == std::string::npos) return QuadraticSurd(parse_int(t));
    return QuadraticSurd(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
  }
  auto close = t.rfind(')');
  if (close == std::string::npos || close < 1) return fail();
  std::string inner = t.substr(1, close - 1);
  Int r = 1;
  if (close + 1 < t.size()) {
    if (t[close + 1] != '/') return fail();
    r = parse_int(t.substr(close + 2));
  }
  // inner: p±q*sqrt(d)
  auto sq = inner.find("*sqrt(");
  if (sq == std::string::npos || inner.back() != ')') return fail();
  // the sign separating p from q: last +/- before "*sqrt(", not at position 0
  size_t signpos = std::string::npos;
  for (size_t k = sq; k-- > 1;) {
    if (inner[k] == '+' || inner[k] == '-') {
      signpos = k;
      break;
    }
  }
  if (signpos == std::string::npos) return fail();
  Int p = parse_int(inner.substr(0, signpos));
  Int q = parse_int(inner.substr(signpos, sq - signpos));
  Int d = parse_int(inner.substr(sq + 6, inner.size() - sq - 7));
  return QuadraticSurd(p, q, d, r);
}

std::string QuadraticSurd::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Int scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  QuadraticSurd scaled = *this * QuadraticSurd(scale);
  Int f = scaled.floor();
  QuadraticSurd frac = scaled - QuadraticSurd(f);
  int cmp = compare(frac, QuadraticSurd(1, 2));
  Int rounded = f;
  if (cmp > 0 || (cmp == 0 && (f % 2) != 0)) ++rounded;
  bool neg = rounded < 0;
  Int mag = abs(rounded);
  std::string digits_str = mag.str();
  if ((int)digits_str.size() <= digits)
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  std::string out;
  if (neg) out += '-';
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) {
    out += '.';
    out += digits_str.substr(digits_str.size() - digits);
  }
  return out;
}

QuadraticSurd parse_decimal(const std::string& literal) {
  auto dot = literal.find('.');
  if (dot == std::string::npos) return QuadraticSurd(parse_int(literal));
  std::string digits = literal;
  digits.erase(dot, 1);
  Int den = 1;
  for (size_t k = dot; k < digits.size(); ++k) den *= 10;
  return QuadraticSurd(parse_int(digits), den);
}

bool agrees_to(const QuadraticSurd& x, const std::string& decimal_literal,
               const Int& tol_den) {
  QuadraticSurd target = parse_decimal(decimal_literal);
  QuadraticSurd tol(Int(1), tol_den);
  return target - tol <= x && x <= target + tol;
}

double QuadraticSurd::to_double() const {
  double pp = p_.convert_to<double>();
  double qq = q_.convert_to<double>();
  double dd = d_.convert_to<double>();
  double rr = r_.convert_to<double>();
  return (pp + qq * std::sqrt(dd)) / rr;
}

}  // namespace ogspec
