#include "ogspec/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ogspec {

namespace {

// maximize N * D(n,i)/m^2 over the given cycle nodes; D values are cached
// per (phase, i) since they only depend on the CF period
LagrangeValue max_over_nodes(const OrbitGraph& g,
                             const std::vector<long long>& period,
                             const std::vector<CycleNode>& nodes) {
  LagrangeValue out;
  std::map<std::pair<int, long long>, QuadraticSurd> dcache;
  QuadraticSurd n_squares{Int(g.squares())};
  bool have_best = false;
  QuadraticSurd best_quot;
  for (int t = 0; t < (int)nodes.size(); ++t) {
    const CycleNode& node = nodes[t];
    long long a_n = period[node.phase];
    for (long long i = 1; i <= a_n; ++i) {
      int vtx = node.stops[i - 1];
      int m2 = g.m[g.r_img[vtx]] * g.m[g.r_img[vtx]];
      auto key = std::make_pair(node.phase, i);
      auto it = dcache.find(key);
      if (it == dcache.end())
        it = dcache.emplace(key, periodic_D(period, node.phase + 1, i)).first;
      QuadraticSurd quot = it->second / QuadraticSurd(Int(m2));
      out.rows.push_back({t + 1, i, vtx, it->second, m2});
      int cmp = have_best ? QuadraticSurd::compare(quot, best_quot) : 1;
      if (cmp > 0) {
        best_quot = quot;
        have_best = true;
        out.witnesses.clear();
      }
      if (cmp >= 0) out.witnesses.push_back(out.rows.back());
    }
  }
  out.value = n_squares * best_quot;
  out.cycle_length = (int)nodes.size();
  return out;
}

void check_formula_hypothesis(const OrbitGraph& g, const CFExpansion& alpha) {
  int M = g.max_multiplicity();
  if (M <= 2) return;  // M^2 - 2 <= 2 < sqrt(5) <= L(T^2, alpha)
  QuadraticSurd classical = classical_lagrange(alpha);
  if (!(QuadraticSurd(Int(M) * M - 2) < classical))
    throw std::domain_error(
        "renormalized formula hypothesis L(T^2,alpha) > M^2-2 not verified "
        "for this orbit");
}

std::vector<std::vector<long long>> even_compositions(long long max_sum,
                                                      long long entries_cap) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long remaining) -> void {
    if (!cur.empty() && cur.size() % 2 == 0) out.push_back(cur);
    for (long long a = 1; a <= std::min(entries_cap, remaining); ++a) {
      cur.push_back(a);
      self(self, remaining - a);
      cur.pop_back();
    }
  };
  rec(rec, max_sum);
  return out;
}

bool loop_closes(const OrbitGraph& g, int start, const std::vector<long long>& period) {
  CFPathState s{start, true};
  for (long long a : period) s = step(g, s, a).state;
  return s.vertex == start && s.positive;
}

std::vector<LoopValue> scan_impl(const OrbitGraph& g, long long max_period_sum,
                                 const std::optional<QuadraticSurd>& ceiling,
                                 bool parallel, long long entries_cap) {
  QuadraticSurd cap = ceiling ? *ceiling : default_scan_ceiling();
  std::vector<std::vector<long long>> periods =
      even_compositions(max_period_sum, entries_cap);
  std::vector<std::vector<LoopValue>> found(periods.size());

#ifdef _OPENMP
  if (parallel) {
    if (const char* env = std::getenv("ORIGAMI_SPECTRUM_THREADS")) {
      int t = std::atoi(env);
      if (t > 0) omp_set_num_threads(t);
    }
  }
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (long long pi = 0; pi < (long long)periods.size(); ++pi) {
    const auto& period = periods[pi];
    for (int s = 0; s < g.size(); ++s) {
      if (!loop_closes(g, s, period)) continue;
      LagrangeValue lv = lagrange_even_loop(g, s, period);
      if (lv.value < cap) found[pi].push_back({s, period, std::move(lv)});
    }
  }

  std::vector<LoopValue> merged;
  for (auto& bucket : found)
    for (auto& lv : bucket) merged.push_back(std::move(lv));
  std::sort(merged.begin(), merged.end(), [](const LoopValue& a, const LoopValue& b) {
    int c = QuadraticSurd::compare(a.lv.value, b.lv.value);
    if (c != 0) return c < 0;
    if (a.period.size() != b.period.size()) return a.period.size() < b.period.size();
    if (a.period != b.period) return a.period < b.period;
    return a.vertex < b.vertex;
  });
  merged.erase(std::unique(merged.begin(), merged.end(),
                           [](const LoopValue& a, const LoopValue& b) {
                             return a.lv.value == b.lv.value;
                           }),
               merged.end());
  return merged;
}

}  // namespace

QuadraticSurd default_scan_ceiling() {
  CFExpansion a = CFExpansion::parse("[1;(1,6)]");
  CFExpansion b = CFExpansion::parse("[;(6,1)]");
  return QuadraticSurd(7) * (QuadraticSurd(1) + eval_cf(a) + eval_cf(b));
}

LagrangeValue lagrange(const OrbitGraph& g, int start, const CFExpansion& alpha) {
  if (alpha.is_rational())
    throw std::domain_error("rational slope: no finite Lagrange value");
  check_formula_hypothesis(g, alpha);
  PathCycle pc = path_cycle(g, start, alpha);
  LagrangeValue lv = max_over_nodes(g, alpha.period, pc.nodes);
  lv.preperiod_steps = pc.preperiod_steps;
  return lv;
}

LagrangeValue lagrange_even_loop(const OrbitGraph& g, int start,
                                 const std::vector<long long>& period) {
  if (period.empty() || period.size() % 2 != 0)
    throw std::invalid_argument("not an even loop: period length must be even");
  if (!loop_closes(g, start, period))
    throw std::invalid_argument("not an even loop: the walk does not close");
  CFExpansion alpha;
  alpha.period = period;
  check_formula_hypothesis(g, alpha);
  std::vector<CycleNode> nodes;
  CFPathState s{start, true};
  for (int ph = 0; ph < (int)period.size(); ++ph) {
    StepResult r = step(g, s, period[ph]);
    nodes.push_back({s, ph, r.stops});
    s = r.state;
  }
  return max_over_nodes(g, period, nodes);
}

OracleReport oracle_lagrange(const OrbitGraph& g, int start,
                             const CFExpansion& alpha, int depth) {
  if (alpha.is_rational())
    throw std::domain_error("rational slope: no finite Lagrange value");
  if (depth < 3 * (int)alpha.period.size())
    throw std::invalid_argument("depth must be at least 3 periods");
  OracleReport rep;
  QuadraticSurd a_exact = eval_cf(alpha);
  QuadraticSurd n_squares{Int(g.squares())};
  bool have = false;
  std::vector<Approximant> apx = approximants(alpha, depth);
  for (const Approximant& a : apx) {
    if (a.n < depth / 2) continue;
    int mult = rational_multiplicity(g, start, a.num, a.den);
    QuadraticSurd err = QuadraticSurd(a.den) * a_exact - QuadraticSurd(a.num);
    if (err.sign() < 0) err = -err;
    QuadraticSurd val =
        n_squares / (QuadraticSurd(Int(mult) * mult) * QuadraticSurd(a.den) * err);
    if (!have || val > rep.best) {
      rep.best = val;
      have = true;
    }
    if (a.is_gauss) rep.trace.emplace_back(a.n, rep.best.to_double());
  }
  rep.exact = lagrange(g, start, alpha).value;
  rep.gap = rep.exact - rep.best;
  return rep;
}

std::vector<LoopValue> scan_even_loops(const OrbitGraph& g, long long max_period_sum,
                                       std::optional<QuadraticSurd> ceiling,
                                       bool parallel, long long entries_cap) {
  return scan_impl(g, max_period_sum, ceiling, parallel, entries_cap);
}

std::vector<LoopValue> scan_even_loops_serial(const OrbitGraph& g,
                                              long long max_period_sum,
                                              std::optional<QuadraticSurd> ceiling,
                                              long long entries_cap) {
  return scan_impl(g, max_period_sum, ceiling, false, entries_cap);
}

}  // namespace ogspec
