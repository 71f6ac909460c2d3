#pragma once

#include "ogspec/cf.hpp"
#include "ogspec/orbit.hpp"
#include "ogspec/surd.hpp"

#include <optional>
#include <vector>

namespace ogspec {

struct Witness {
  int n;          // cycle position, 1-based
  long long i;    // 1..a_n
  int vertex;     // orbit vertex visited at this Farey/Gauss stop
  QuadraticSurd d_value;
  int m_squared;  // denominator m^2 at R of the stop vertex
};

struct LagrangeValue {
  QuadraticSurd value;             // N * max over rows of D / m^2
  std::vector<Witness> witnesses;  // rows attaining the maximum
  std::vector<Witness> rows;       // every (n, i) row over the cycle
  int cycle_length = 0;            // CF entries in the asymptotic cycle
  int preperiod_steps = 0;
};

// Exact Lagrange value of (start, alpha) through the renormalized formula:
// N * max over the asymptotic cycle of D(n,i,alpha) / m^2(R g(...) X).
// alpha must be a quadratic irrational. For graphs with maximal
// multiplicity above 2 the hypothesis L(T^2,alpha) > M^2 - 2 is checked
// exactly and the call is refused when it fails.
LagrangeValue lagrange(const OrbitGraph& g, int start, const CFExpansion& alpha);

// Same value for a closed even loop: g(period) start == start is required
// (throws "not an even loop" otherwise) and the maximum runs over the single
// loop pass.
LagrangeValue lagrange_even_loop(const OrbitGraph& g, int start,
                                 const std::vector<long long>& period);

struct OracleReport {
  QuadraticSurd best;   // running max over the tail window [depth/2, depth]
  QuadraticSurd exact;  // value from lagrange()
  QuadraticSurd gap;    // exact - best
  std::vector<std::pair<int, double>> trace;  // (n, running max) per index
};

// Truncation oracle straight from the definition: enumerates Gauss and
// Farey approximants p/q of alpha up to the given depth and maximizes
// N / (m^2(p/q, start) * q * |q alpha - p|) with exact arithmetic, the
// multiplicities coming from rational_multiplicity. Independent of the
// renormalized D route except for the shared orbit walk.
OracleReport oracle_lagrange(const OrbitGraph& g, int start,
                             const CFExpansion& alpha, int depth);

struct LoopValue {
  int vertex;
  std::vector<long long> period;
  LagrangeValue lv;
};

// All values of closed even loops with entries in 1..6 and period sum at
// most max_period_sum, deduplicated by exact value and sorted ascending.
// Values at or above the ceiling (default eta_3) are dropped; pass a larger
// ceiling only with entries_cap raised accordingly (the 1..6 cap is only
// valid below 7*(7+2*[overline(7,1)])/4).
std::vector<LoopValue> scan_even_loops(
    const OrbitGraph& g, long long max_period_sum,
    std::optional<QuadraticSurd> ceiling = std::nullopt, bool parallel = true,
    long long entries_cap = 6);

// Single-threaded reference for the scan; same results, used by tests and
// the benchmark.
std::vector<LoopValue> scan_even_loops_serial(
    const OrbitGraph& g, long long max_period_sum,
    std::optional<QuadraticSurd> ceiling = std::nullopt,
    long long entries_cap = 6);

// default scan ceiling eta_3 = 7*(1 + [1,overline(1,6)] + [overline(6,1)])
QuadraticSurd default_scan_ceiling();

}  // namespace ogspec
