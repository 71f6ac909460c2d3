#include "ogspec/subshift.hpp"

#include "ogspec/cf.hpp"
#include "ogspec/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ogspec {

namespace {

const std::vector<long long> kA = {1, 4, 2, 4};
const std::vector<long long> kB = {1, 3};

void append_letter(std::vector<long long>& out, char c) {
  const auto& block = c == 'a' ? kA : kB;
  out.insert(out.end(), block.begin(), block.end());
}

// [1,4, entries..., overline(1,3)]
QuadraticSurd tail_value(const std::vector<long long>& entries) {
  CFExpansion e;
  e.preperiod = {1, 4};
  e.preperiod.insert(e.preperiod.end(), entries.begin(), entries.end());
  e.period = kB;
  return eval_cf(e);
}

// [1,4, overline(entries...)]
QuadraticSurd periodic_tail_value(const std::vector<long long>& period) {
  CFExpansion e;
  e.preperiod = {1, 4};
  e.period = period;
  return eval_cf(e);
}

std::vector<long long> expand_letters(const std::string& letters) {
  std::vector<long long> out;
  for (char c : letters) append_letter(out, c);
  return out;
}

}  // namespace

ABWord ABWord::parse(const std::string& text) {
  ABWord w;
  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (isspace((unsigned char)c)) {
      ++pos;
      continue;
    }
    if (c != 'a' && c != 'b')
      throw std::invalid_argument("letters must be a or b: " + text);
    ++pos;
    long long rep = 1;
    if (pos < text.size() && (text[pos] == '^')) {
      ++pos;
      std::string num;
      while (pos < text.size() && isdigit((unsigned char)text[pos]))
        num.push_back(text[pos++]);
      if (num.empty()) throw std::invalid_argument("missing exponent: " + text);
      rep = std::stoll(num);
    }
    w.letters.append(rep, c);
  }
  if (w.letters.empty()) throw std::invalid_argument("empty word");
  return w;
}

int ABWord::count(char c) const {
  return (int)std::count(letters.begin(), letters.end(), c);
}

std::vector<long long> expand(const ABWord& w) { return expand_letters(w.letters); }

QuadraticSurd l_sigma_periodic(const ABWord& w) {
  if (!w.has_a())
    throw std::domain_error("all-b word is outside the subshift domain");
  int L = (int)w.letters.size();
  bool have = false;
  QuadraticSurd best;
  for (int j = 0; j < L; ++j) {
    if (w.letters[j] != 'a') continue;
    std::string fwd, bwd;
    for (int t = 1; t <= L; ++t) fwd.push_back(w.letters[(j + t) % L]);
    for (int t = 1; t <= L; ++t) bwd.push_back(w.letters[((j - t) % L + L) % L]);
    QuadraticSurd v = periodic_tail_value(expand_letters(fwd)) +
                      periodic_tail_value(expand_letters(bwd));
    if (!have || v > best) {
      best = v;
      have = true;
    }
  }
  return QuadraticSurd(7) * best;
}

QuadraticSurd l_sigma_limit(const LimitWordSpec& s) {
  if (s.v.letters != "b")
    throw std::invalid_argument("no closed form: v must be the single letter b");
  const std::string& u = s.u.letters;
  long long k = 0;
  while (k < (long long)u.size() && u[k] == 'a') ++k;
  if (k == 0) throw std::invalid_argument("no closed form: u must start with a");
  std::string rest = u.substr(k);
  long long n = 0;
  while (n < (long long)rest.size() && rest[n] == 'b') ++n;
  bool family_one = rest.empty();
  bool family_two = n >= 1 && rest.substr(n) == "a";
  if (!family_one && !family_two)
    throw std::invalid_argument(
        "no closed form for this limit word shape (supported: a^k and a^k b^n a)");
  long long i = (k - 1) / 2;
  std::vector<long long> ai = expand_letters(std::string(i, 'a'));
  std::vector<long long> ai1 = expand_letters(std::string(i + 1, 'a'));
  QuadraticSurd plain = k % 2 == 1 ? tail_value(ai) : tail_value(ai1);
  QuadraticSurd marked;
  if (family_one) {
    marked = tail_value(ai);
  } else {
    std::string word(i, 'a');
    word.append(n, 'b');
    word.push_back('a');
    marked = tail_value(expand_letters(word));
  }
  return QuadraticSurd(7) * (plain + marked);
}

QuadraticSurd l_sigma_limit_direct(const ABWord& u) {
  if (!u.has_a()) throw std::domain_error("u must contain the letter a");
  const std::string& w = u.letters;
  bool have = false;
  QuadraticSurd best;
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] != 'a') continue;
    std::string fwd = w.substr(j + 1);
    std::string bwd(w.rbegin() + (w.size() - j), w.rend());
    QuadraticSurd v =
        tail_value(expand_letters(fwd)) + tail_value(expand_letters(bwd));
    if (!have || v > best) {
      best = v;
      have = true;
    }
  }
  return QuadraticSurd(7) * best;
}

QuadraticSurd phi_1() {
  return QuadraticSurd(7) + QuadraticSurd(14) * eval_cf(CFExpansion::parse("[;(3,1)]"));
}

QuadraticSurd phi_2() {
  return QuadraticSurd(14) * eval_cf(CFExpansion::parse("[1,4;(1,3)]"));
}

QuadraticSurd phi_inf() {
  return QuadraticSurd(14) * eval_cf(CFExpansion::parse("[1,4;(1,4,2,4)]"));
}

QuadraticSurd eta_1() {
  QuadraticSurd s = eval_cf(CFExpansion::parse("[1,4,2;(1,5)]")) + QuadraticSurd(5) +
                    eval_cf(CFExpansion::parse("[1,5,1;(1,5)]"));
  return QuadraticSurd(7) * s / QuadraticSurd(4);
}

QuadraticSurd eta_2() {
  QuadraticSurd s = eval_cf(CFExpansion::parse("[1;(1,6)]")) + QuadraticSurd(6) +
                    eval_cf(CFExpansion::parse("[;(6,1)]"));
  return QuadraticSurd(7) * s / QuadraticSurd(4);
}

QuadraticSurd eta_3() { return default_scan_ceiling(); }

Gap gap_first(long long k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) return {phi_1(), phi_2(), 1, 0, 0};
  ABWord left_word{"b" + std::string(k, 'a')};
  LimitWordSpec right{ABWord{std::string(k + 1, 'a')}, ABWord{"b"}};
  Gap g{l_sigma_periodic(left_word), l_sigma_limit(right), 1, k, 0};
  if (!(g.left < g.right)) throw std::logic_error("degenerate first-generation gap");
  return g;
}

Gap gap_second(long long k, long long n) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  ABWord left_word{std::string(k, 'a') + std::string(n + 1, 'b')};
  std::string u = std::string(k, 'a') + std::string(n, 'b') + "a";
  Gap g{l_sigma_periodic(left_word), l_sigma_limit({ABWord{u}, ABWord{"b"}}), 2, k, n};
  if (!(g.left < g.right)) throw std::logic_error("degenerate second-generation gap");
  return g;
}

std::pair<QuadraticSurd, QuadraticSurd> first_generation_interval(long long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  LimitWordSpec lo{ABWord{std::string(k, 'a')}, ABWord{"b"}};
  ABWord hi{"b" + std::string(k, 'a')};
  return {l_sigma_limit(lo), l_sigma_periodic(hi)};
}

long long kappa(const ABWord& w) {
  if (!w.has_a()) throw std::domain_error("all-b word is outside the subshift domain");
  if (!w.has_b()) throw std::domain_error("all-a word: the a-run is unbounded");
  // longest a-run of the cyclic word: scan two copies
  std::string doubled = w.letters + w.letters;
  long long best = 0, run = 0;
  for (char c : doubled) {
    run = c == 'a' ? run + 1 : 0;
    best = std::max(best, run);
  }
  return std::min<long long>(best, (long long)w.letters.size());
}

std::optional<long long> nu(const ABWord& w) {
  if (!w.has_a()) throw std::domain_error("all-b word is outside the subshift domain");
  if (!w.has_b()) return std::nullopt;  // pattern needs a b-run
  long long k = kappa(w);
  // maximal runs of the cyclic word, starting at a run boundary
  const std::string& s = w.letters;
  int L = (int)s.size();
  int start = 0;
  while (start < L && s[(start - 1 + L) % L] == s[start]) ++start;
  std::vector<std::pair<char, long long>> runs;
  for (int t = 0; t < L;) {
    char c = s[(start + t) % L];
    long long len = 0;
    while (t < L && s[(start + t) % L] == c) {
      ++t;
      ++len;
    }
    runs.emplace_back(c, len);
  }
  std::optional<long long> best;
  int R = (int)runs.size();
  for (int idx = 0; idx < R; ++idx) {
    if (runs[idx].first != 'b') continue;
    long long left = runs[(idx - 1 + R) % R].second;
    long long right = runs[(idx + 1) % R].second;
    if (left == k || right == k) {
      if (!best || runs[idx].second < *best) best = runs[idx].second;
    }
  }
  return best;
}

namespace {

QuadraticSurd letters_value(const std::string& letters_then_periodic,
                            const std::string& periodic) {
  CFExpansion e;
  e.preperiod = expand_letters(letters_then_periodic);
  e.period = expand_letters(periodic);
  return eval_cf(e);
}

}  // namespace

std::vector<LexCheckItem> verify_lexicographic(std::mt19937& rng, int random_words) {
  std::vector<LexCheckItem> out;
  QuadraticSurd b_inf = letters_value("", "b");
  QuadraticSurd ba_inf = letters_value("b", "a");
  QuadraticSurd ab_inf = letters_value("a", "b");
  QuadraticSurd a_inf = letters_value("", "a");

  auto push = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };
  push("2[a,b~] > [b,a~] + [a~]",
       QuadraticSurd(2) * ab_inf > ba_inf + a_inf, "");
  push("2[b,a~] < [a,b~] + [b~]",
       QuadraticSurd(2) * ba_inf < ab_inf + b_inf, "");
  Int e8 = 100000000;
  push("[b~] = 0.79128784 (1e-8)", agrees_to(b_inf, "0.79128784", e8),
       "computed " + b_inf.decimal(10));
  push("[b,a~] = 0.79238557 (1e-8)", agrees_to(ba_inf, "0.79238557", e8),
       "computed " + ba_inf.decimal(10));
  push("[a,b~] = 0.81660638 (1e-8)", agrees_to(ab_inf, "0.81660638", e8),
       "computed " + ab_inf.decimal(10));
  push("[a~] = 0.81661395 (1e-8)", agrees_to(a_inf, "0.81661395", e8),
       "computed " + a_inf.decimal(10));

  // separation max [1,4,u,b,w] < min [1,4,u,a,w']; extreme letter tails are
  // b a^inf on the left and a b^inf on the right
  std::uniform_int_distribution<int> len(0, 6), coin(0, 1);
  bool sep_ok = true;
  for (int t = 0; t < random_words && sep_ok; ++t) {
    std::string u;
    int l = len(rng);
    for (int j = 0; j < l; ++j) u.push_back(coin(rng) ? 'a' : 'b');
    CFExpansion lhs, rhs;
    lhs.preperiod = {1, 4};
    for (long long e : expand_letters(u + "b")) lhs.preperiod.push_back(e);
    lhs.period = kA;
    rhs.preperiod = {1, 4};
    for (long long e : expand_letters(u + "a")) rhs.preperiod.push_back(e);
    rhs.period = kB;
    if (!(eval_cf(lhs) < eval_cf(rhs))) sep_ok = false;
  }
  push("separation [1,4,u,b,*] < [1,4,u,a,*]", sep_ok,
       "random finite words u, extremal tails");

  // centering instance i=j=1, i'=2, j'=0, omega = omega' = b^inf:
  // 2*[1,4,a,b^inf] > [1,4,a^2,b^inf] + [1,4,b^inf]
  QuadraticSurd lhs = QuadraticSurd(2) * tail_value(expand_letters("a"));
  QuadraticSurd rhs = tail_value(expand_letters("aa")) + tail_value({});
  push("centering [1,4,a,b,*] pair", lhs > rhs, "");
  return out;
}

SubshiftOrbitReport subshift_vs_orbit(const OrbitGraph& b7, const ABWord& w) {
  SubshiftOrbitReport rep;
  rep.subshift_value = l_sigma_periodic(w);
  if (!(rep.subshift_value < eta_1()))
    throw std::domain_error("value above the reduction threshold eta_1");
  std::vector<long long> period = expand(w);
  // the realizing loop is based in the multiplicity-2 cusp
  for (int s = 0; s < b7.size(); ++s) {
    if (b7.m[s] != 2) continue;
    CFPathState st{s, true};
    for (long long a : period) st = step(b7, st, a).state;
    if (st.vertex != s || !st.positive) continue;
    LagrangeValue lv = lagrange_even_loop(b7, s, period);
    rep.vertex = s;
    rep.orbit_value = lv.value;
    rep.equal = rep.orbit_value == rep.subshift_value;
    if (rep.equal) return rep;
  }
  if (rep.vertex < 0)
    throw std::runtime_error(
        "no vertex of the multiplicity-2 cusp realizes the loop");
  return rep;
}

}  // namespace ogspec
