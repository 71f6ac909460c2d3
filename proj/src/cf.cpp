#include "ogspec/cf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace ogspec {

namespace {

struct Convergents {
  // matrix [p_k p_{k-1}; q_k q_{k-1}] built left to right
  Int p = 0, pm = 1;  // p_0 = 0, p_{-1} = 1
  Int q = 1, qm = 0;  // q_0 = 1, q_{-1} = 0
  void push(long long a) {
    Int np = a * p + pm, nq = a * q + qm;
    pm = p;
    qm = q;
    p = np;
    q = nq;
  }
};

void check_entries(const std::vector<long long>& v) {
  for (long long a : v)
    if (a < 1) throw std::invalid_argument("continued fraction entry < 1");
}

// value of the purely periodic CF with the given period, in (0,1)
QuadraticSurd purely_periodic(const std::vector<long long>& period) {
  Convergents c;
  for (long long a : period) c.push(a);
  // x = (p + pm*x)/(q + qm*x)  =>  qm*x^2 + (q - pm)*x - p = 0
  Int A = c.qm, B = c.q - c.pm, C = -c.p;
  Int disc = B * B - 4 * A * C;
  // attracting fixed point in (0,1) is the + root
  return QuadraticSurd(-B, 1, disc, 2 * A);
}

std::vector<long long> rotate_right(std::vector<long long> v) {
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
  return v;
}

}  // namespace

void CFExpansion::canonicalize() {
  check_entries(preperiod);
  check_entries(period);
  if (period.empty()) return;
  // primitive period
  size_t P = period.size();
  for (size_t len = 1; len < P; ++len) {
    if (P % len != 0) continue;
    bool rep = true;
    for (size_t k = len; k < P && rep; ++k) rep = period[k] == period[k % len];
    if (rep) {
      period.resize(len);
      P = len;
      break;
    }
  }
  // minimal preperiod: absorb matching trailing entries into the period
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    period = rotate_right(period);
    preperiod.pop_back();
  }
}

CFExpansion CFExpansion::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  CFExpansion e;
  auto bracket = t.find('[');
  if (bracket == std::string::npos || t.back() != ']')
    throw std::invalid_argument("cannot parse continued fraction: " + s);
  if (bracket > 0) {
    if (t[bracket - 1] != '+')
      throw std::invalid_argument("cannot parse continued fraction: " + s);
    e.integer_part = std::stoll(t.substr(0, bracket - 1));
  }
  std::string body = t.substr(bracket + 1, t.size() - bracket - 2);
  auto semi = body.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("expected ';' in continued fraction: " + s);
  auto parse_list = [&](const std::string& part) {
    std::vector<long long> out;
    std::string cur;
    for (char c : part) {
      if (c == ',') {
        if (!cur.empty()) out.push_back(std::stoll(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
  };
  e.preperiod = parse_list(body.substr(0, semi));
  std::string per = body.substr(semi + 1);
  if (!per.empty()) {
    if (per.front() != '(' || per.back() != ')')
      throw std::invalid_argument("period must be parenthesized: " + s);
    e.period = parse_list(per.substr(1, per.size() - 2));
  }
  e.canonicalize();
  return e;
}

std::string CFExpansion::str() const {
  std::ostringstream os;
  if (integer_part != 0) os << integer_part << "+";
  os << "[";
  for (size_t k = 0; k < preperiod.size(); ++k)
    os << (k ? "," : "") << preperiod[k];
  os << ";";
  if (!period.empty()) {
    os << "(";
    for (size_t k = 0; k < period.size(); ++k)
      os << (k ? "," : "") << period[k];
    os << ")";
  }
  os << "]";
  return os.str();
}

QuadraticSurd eval_cf(const CFExpansion& e) {
  check_entries(e.preperiod);
  check_entries(e.period);
  Convergents c;
  for (long long a : e.preperiod) c.push(a);
  QuadraticSurd frac;
  if (e.period.empty()) {
    frac = QuadraticSurd(c.p, c.q);
  } else {
    QuadraticSurd x = purely_periodic(e.period);
    QuadraticSurd num = QuadraticSurd(c.p) + QuadraticSurd(c.pm) * x;
    QuadraticSurd den = QuadraticSurd(c.q) + QuadraticSurd(c.qm) * x;
    frac = num / den;
  }
  return QuadraticSurd(Int(e.integer_part)) + frac;
}

CFExpansion cf_of_surd(const QuadraticSurd& x) {
  CFExpansion e;
  Int a0 = x.floor();
  e.integer_part = a0.convert_to<long long>();
  QuadraticSurd y = x - QuadraticSurd(a0);
  if (y.is_zero()) return e;
  if (y.is_rational()) {
    // Euclid on the fractional part
    Int num = y.p(), den = y.r();
    while (num != 0) {
      Int a = floor_div(den, num);
      e.preperiod.push_back(a.convert_to<long long>());
      Int rest = den - a * num;  // den/num = a + rest/num
      den = num;
      num = rest;
    }
    e.canonicalize();
    return e;
  }
  std::map<std::tuple<Int, Int, Int>, size_t> seen;
  std::vector<long long> entries;
  for (;;) {
    auto key = std::make_tuple(y.p(), y.q(), y.r());
    auto it = seen.find(key);
    if (it != seen.end()) {
      e.preperiod.assign(entries.begin(), entries.begin() + it->second);
      e.period.assign(entries.begin() + it->second, entries.end());
      e.canonicalize();
      return e;
    }
    seen.emplace(key, entries.size());
    QuadraticSurd inv = y.inverse();
    Int a = inv.floor();
    entries.push_back(a.convert_to<long long>());
    y = inv - QuadraticSurd(a);
    if (entries.size() > 2000000)
      throw std::runtime_error("continued fraction did not become periodic");
  }
}

std::vector<Approximant> approximants(const CFExpansion& e, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (e.is_rational() && (int)e.preperiod.size() < depth)
    throw std::invalid_argument("rational expansion shorter than depth");
  std::vector<Approximant> out;
  Convergents c;
  Int a0 = e.integer_part;
  for (int n = 1; n <= depth; ++n) {
    long long a =
        n <= (int)e.preperiod.size()
            ? e.preperiod[n - 1]
            : e.period[(n - 1 - e.preperiod.size()) % e.period.size()];
    for (long long i = 1; i <= a; ++i) {
      Int num = i * c.p + c.pm, den = i * c.q + c.qm;
      out.push_back({a0 * den + num, den, n, i, i == a});
    }
    c.push(a);
  }
  return out;
}

QuadraticSurd periodic_D(const std::vector<long long>& period, int n, long long i) {
  check_entries(period);
  if (period.empty()) throw std::invalid_argument("empty period");
  int P = (int)period.size();
  if (n < 1) throw std::invalid_argument("position must be >= 1");
  auto at = [&](long long k) {  // period entry at 1-based cyclic position k
    long long m = (k - 1) % P;
    if (m < 0) m += P;
    return period[m];
  };
  long long a_n = at(n);
  if (i < 1 || i > a_n) throw std::out_of_range("index i outside 1..a_n");
  CFExpansion fwd, bwd;
  if (i == a_n) {
    for (int k = 0; k < P; ++k) bwd.period.push_back(at(n - k));
    for (int k = 0; k < P; ++k) fwd.period.push_back(at(n + 2 + k));
    return eval_cf(bwd) + QuadraticSurd(Int(at(n + 1))) + eval_cf(fwd);
  }
  bwd.preperiod.push_back(i);
  for (int k = 0; k < P; ++k) bwd.period.push_back(at(n - 1 - k));
  fwd.preperiod.push_back(a_n - i);
  for (int k = 0; k < P; ++k) fwd.period.push_back(at(n + 1 + k));
  return eval_cf(bwd) + eval_cf(fwd);
}

QuadraticSurd classical_lagrange(const CFExpansion& e) {
  if (e.is_rational())
    throw std::domain_error("rational slope: approximation is unbounded");
  QuadraticSurd best;
  for (int n = 1; n <= (int)e.period.size(); ++n) {
    QuadraticSurd v = periodic_D(e.period, n, e.period[n - 1]);
    if (n == 1 || v > best) best = v;
  }
  return best;
}

std::pair<QuadraticSurd, QuadraticSurd> min_max_tail(
    const std::vector<long long>& prefix, long long M) {
  if (M < 1) throw std::invalid_argument("tail bound must be >= 1");
  CFExpansion lo, hi;
  lo.preperiod = prefix;
  hi.preperiod = prefix;
  lo.period = {M, 1};
  hi.period = {1, M};
  if (prefix.size() % 2 == 1) std::swap(lo, hi);
  if (M == 1) lo.period = hi.period = {1};
  return {eval_cf(lo), eval_cf(hi)};
}

}  // namespace ogspec
