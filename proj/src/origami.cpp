#include "ogspec/origami.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ogspec {

namespace {

// 2x2 row HNF accumulator for a sublattice of Z^2: rows [[a,b],[0,d]]
struct Lattice2 {
  long long a = 0, b = 0, d = 0;
  static long long egcd(long long x, long long y, long long& u, long long& v) {
    if (y == 0) {
      u = x >= 0 ? 1 : -1;
      v = 0;
      return std::abs(x);
    }
    long long u1, v1;
    long long g = egcd(y, x % y, u1, v1);
    u = v1;
    v = u1 - (x / y) * v1;
    return g;
  }
  void insert(long long x, long long y) {
    if (x == 0) {
      d = std::gcd(d, std::abs(y));
      return;
    }
    if (a == 0) {
      a = std::abs(x);
      b = x > 0 ? y : -y;
      return;
    }
    long long u, v;
    long long g = egcd(a, x, u, v);
    long long nb = u * b + v * y;
    long long rest = (x / g) * b - (a / g) * y;
    a = g;
    b = nb;
    d = std::gcd(d, std::abs(rest));
  }
  std::array<std::array<long long, 2>, 2> rows() {
    if (d > 0) b = ((b % d) + d) % d;
    return {{{a, b}, {0, d}}};
  }
};

}  // namespace

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.degree() != v_.degree())
    throw std::invalid_argument("h and v act on different square counts");
}

Origami Origami::torus() { return Origami(Permutation(1), Permutation(1)); }

bool Origami::connected() const {
  int n = squares();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  Permutation hi = h_.inverse(), vi = v_.inverse();
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : {h_(i), v_(i), hi(i), vi(i)}) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

Origami Origami::canonical() const {
  int n = squares();
  std::vector<int> best_h, best_v;
  std::vector<int> label(n), order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[s] = 0;
    order.push_back(s);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int i = order[qi];
      for (int j : {h_(i), v_(i)}) {
        if (label[j] < 0) {
          label[j] = (int)order.size();
          order.push_back(j);
        }
      }
    }
    if ((int)order.size() != n) throw std::domain_error("not connected");
    std::vector<int> hh(n), vv(n);
    for (int i = 0; i < n; ++i) {
      hh[label[i]] = label[h_(i)];
      vv[label[i]] = label[v_(i)];
    }
    if (best_h.empty() || std::tie(hh, vv) < std::tie(best_h, best_v)) {
      best_h = std::move(hh);
      best_v = std::move(vv);
    }
  }
  return Origami(Permutation(std::move(best_h)), Permutation(std::move(best_v)));
}

std::vector<int> Origami::stratum() const {
  Permutation c = h_.then(v_).then(h_.inverse()).then(v_.inverse());
  std::vector<int> orders;
  for (const auto& cyc : c.cycles())
    if (cyc.size() >= 2) orders.push_back((int)cyc.size() - 1);
  std::sort(orders.begin(), orders.end());
  return orders;
}

int Origami::genus() const {
  int total = 0;
  for (int k : stratum()) total += k;
  return total / 2 + 1;
}

std::array<std::array<long long, 2>, 2> Origami::absolute_period_lattice() const {
  int n = squares();
  std::vector<std::array<long long, 2>> pos(n);
  std::vector<bool> placed(n, false);
  Lattice2 lat;
  pos[0] = {0, 0};
  placed[0] = true;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const auto [x, y] = pos[i];
    struct Edge {
      int to;
      long long dx, dy;
    };
    for (const Edge& e : {Edge{h_(i), 1, 0}, Edge{v_(i), 0, 1}}) {
      if (placed[e.to]) {
        lat.insert(x + e.dx - pos[e.to][0], y + e.dy - pos[e.to][1]);
      } else {
        pos[e.to] = {x + e.dx, y + e.dy};
        placed[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return lat.rows();
}

bool Origami::is_primitive() const {
  auto m = absolute_period_lattice();
  return m[0][0] == 1 && m[0][1] == 0 && m[1][1] == 1;
}

Origami Origami::acted(GL2Letter g) const {
  switch (g) {
    case GL2Letter::T:
      return Origami(h_, v_.then(h_.inverse()));
    case GL2Letter::TInv:
      return Origami(h_, v_.then(h_));
    case GL2Letter::R:
      return Origami(v_, h_.inverse());
  }
  throw std::logic_error("unknown generator");
}

Origami Origami::act(const std::vector<GL2Letter>& word) const {
  Origami cur = *this;
  for (GL2Letter g : word) cur = cur.acted(g);
  return cur.canonical();
}

int Origami::horizontal_multiplicity() const {
  Permutation c = h_.then(v_).then(h_.inverse()).then(v_.inverse());
  int n = squares();
  std::vector<bool> marked(n, false);
  bool any = false;
  for (const auto& cyc : c.cycles()) {
    if (cyc.size() >= 2) {
      for (int i : cyc) marked[i] = true;
      any = true;
    }
  }
  if (!any) throw std::domain_error("no saddle connections");
  int best = n + 1;
  for (int i = 0; i < n; ++i) {
    if (!marked[i]) continue;
    int j = h_(i), d = 1;
    while (!marked[j]) {
      j = h_(j);
      ++d;
    }
    best = std::min(best, d);
  }
  return best;
}

Origami Origami::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!isspace((unsigned char)c)) text.push_back(c);
  auto hpos = text.find("h=");
  auto vpos = text.find("v=");
  if (hpos == std::string::npos || vpos == std::string::npos || vpos <= hpos)
    throw std::invalid_argument("expected 'h=(...) v=(...)': " + raw);
  std::string hs = text.substr(hpos + 2, vpos - hpos - 2);
  std::string vs = text.substr(vpos + 2);
  int n = 0;
  std::string cur;
  for (const std::string* part : {&hs, &vs}) {
    cur.clear();
    for (char ch : *part) {
      if (isdigit((unsigned char)ch)) {
        cur.push_back(ch);
      } else {
        if (!cur.empty()) n = std::max(n, std::stoi(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) n = std::max(n, std::stoi(cur));
  }
  if (n == 0) throw std::invalid_argument("no squares in " + text);
  return Origami(Permutation::from_cycles(hs, n), Permutation::from_cycles(vs, n));
}

std::string Origami::text() const {
  return "h=" + h_.cycle_string() + " v=" + v_.cycle_string();
}

nlohmann::json Origami::to_json() const {
  return nlohmann::json{{"n", squares()}, {"h", h_.one_based()}, {"v", v_.one_based()}};
}

Origami Origami::from_json(const nlohmann::json& j) {
  std::vector<int> h = j.at("h").get<std::vector<int>>();
  std::vector<int> v = j.at("v").get<std::vector<int>>();
  int n = j.at("n").get<int>();
  if ((int)h.size() != n || (int)v.size() != n)
    throw std::invalid_argument("inconsistent square count in JSON origami");
  return Origami(Permutation::from_one_based(h), Permutation::from_one_based(v));
}

bool Origami::operator<(const Origami& o) const {
  if (squares() != o.squares()) return squares() < o.squares();
  if (!(h_ == o.h_)) return h_ < o.h_;
  return v_ < o.v_;
}

}  // namespace ogspec
