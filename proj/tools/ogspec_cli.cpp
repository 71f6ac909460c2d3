// Command-line front end: orbit derivation, Lagrange values, gap tables and
// the verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 verification/consistency failure.

#include "ogspec/cf.hpp"
#include "ogspec/orbit.hpp"
#include "ogspec/spectrum.hpp"
#include "ogspec/subshift.hpp"
#include "ogspec/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace ogspec;
using nlohmann::json;

std::string decimal_with_bound(const QuadraticSurd& x, int digits) {
  return x.decimal(digits) + "+-1e-" + std::to_string(digits);
}

OrbitGraph load_graph(const std::string& seed_file) {
  if (seed_file.empty()) return find_b7();
  std::ifstream in(seed_file);
  if (!in) throw CLI::ValidationError("--seed-file", "cannot open " + seed_file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return enumerate_orbit(Origami::parse(text));
}

json witness_json(const Witness& w) {
  return json{{"n", w.n},
              {"i", w.i},
              {"vertex", w.vertex},
              {"D", w.d_value.str()},
              {"D_decimal", w.d_value.decimal(6)},
              {"m2", w.m_squared}};
}

int cmd_orbit(const std::string& seed_file, const std::string& dot_file,
              const std::string& json_file, bool all_orbits) {
  if (all_orbits) {
    std::vector<OrbitGraph> orbits = orbits_of_stratum(7, {2});
    std::cout << "primitive 7-square H(2) orbits:";
    for (const auto& g : orbits) std::cout << " " << g.size();
    std::cout << "\n";
    bool ok = orbits.size() == 2 && orbits[0].size() == 36 && orbits[1].size() == 54;
    return ok ? 0 : 2;
  }
  OrbitGraph g = load_graph(seed_file);
  std::cout << g.size() << " vertices / " << g.cusps.size() << " cusps\n";
  std::cout << "cusp widths:";
  for (int w : g.cusp_widths()) std::cout << " " << w;
  std::cout << "\n";
  int m2 = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.m[v] == 2) ++m2;
  std::cout << "vertices with multiplicity 2: " << m2 << "\n";
  if (!dot_file.empty()) {
    if (dot_file == "-") {
      std::cout << g.dot();
    } else {
      std::ofstream(dot_file) << g.dot();
    }
  }
  if (!json_file.empty()) {
    if (json_file == "-") {
      std::cout << g.to_json().dump(2) << "\n";
    } else {
      std::ofstream(json_file) << g.to_json().dump(2) << "\n";
    }
  }
  if (seed_file.empty()) {
    bool ok = g.size() == 36 &&
              g.cusp_widths() == std::vector<int>{7, 7, 7, 5, 3, 3, 3, 1} && m2 == 7;
    if (!ok) {
      std::cerr << "orbit statistics differ from the expected B7 values\n";
      return 2;
    }
  }
  return 0;
}

int cmd_lagrange(const std::string& alpha_text, int start, bool min_over_starts,
                 bool all_starts, bool torus, const std::string& format,
                 const std::string& seed_file, int oracle_depth) {
  CFExpansion alpha = CFExpansion::parse(alpha_text);
  if (alpha.is_rational())
    throw CLI::ValidationError("alpha", "rational slope has no Lagrange value");
  if (torus) {
    QuadraticSurd v = classical_lagrange(alpha);
    if (format == "json") {
      std::cout << json{{"alpha", alpha.str()},
                        {"value_surd", v.str()},
                        {"value_decimal", v.decimal(6)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "L(T^2, " << alpha.str() << ") = " << v.str() << " = "
                << decimal_with_bound(v, 6) << "\n";
    }
    return 0;
  }
  OrbitGraph g = load_graph(seed_file);
  std::vector<int> starts;
  if (all_starts || min_over_starts) {
    for (int s = 0; s < g.size(); ++s) starts.push_back(s);
  } else {
    if (start < 0 || start >= g.size())
      throw CLI::ValidationError("--start", "vertex index out of range");
    starts.push_back(start);
  }
  std::vector<std::pair<int, LagrangeValue>> results;
  for (int s : starts) results.emplace_back(s, lagrange(g, s, alpha));
  if (min_over_starts) {
    auto best = std::min_element(results.begin(), results.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.second.value < b.second.value;
                                 });
    results = {*best};
  }
  json out = json::array();
  for (const auto& [s, lv] : results) {
    if (format == "json") {
      json witnesses = json::array();
      for (const Witness& w : lv.witnesses) witnesses.push_back(witness_json(w));
      out.push_back(json{{"alpha", alpha.str()},
                         {"start_id", s},
                         {"value_surd", lv.value.str()},
                         {"value_decimal", lv.value.decimal(6)},
                         {"witnesses", witnesses}});
    } else {
      std::cout << "start " << s << ": L = " << lv.value.str() << " = "
                << decimal_with_bound(lv.value, 6) << "\n";
      for (const Witness& w : lv.witnesses)
        std::cout << "  witness n=" << w.n << " i=" << w.i << " vertex=" << w.vertex
                  << " D=" << w.d_value.decimal(7) << " m^2=" << w.m_squared << "\n";
    }
    if (oracle_depth > 0) {
      OracleReport rep = oracle_lagrange(g, s, alpha, oracle_depth);
      std::cout << "  oracle depth " << oracle_depth << ": "
                << rep.best.decimal(6) << " (gap " << rep.gap.decimal(8) << ")\n";
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_gaps(long long k_max, long long n_max, const std::string& format) {
  std::vector<Gap> gaps;
  for (long long k = 0; k <= k_max; ++k) gaps.push_back(gap_first(k));
  for (long long k = 1; k <= k_max; ++k)
    for (long long n = 1; n <= n_max; ++n) gaps.push_back(gap_second(k, n));
  // monotonicity of the first generation is part of the contract
  for (size_t k = 0; k + 1 <= (size_t)k_max; ++k) {
    if (!(gaps[k].right < gaps[k + 1].left)) {
      std::cerr << "gap ordering violated at k=" << k << "\n";
      return 2;
    }
  }
  if (format == "json") {
    json out = json::array();
    for (const Gap& g : gaps)
      out.push_back(json{{"generation", g.generation},
                         {"k", g.k},
                         {"n", g.n},
                         {"left_surd", g.left.str()},
                         {"right_surd", g.right.str()},
                         {"left_dec", g.left.decimal(9)},
                         {"right_dec", g.right.decimal(9)}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k,n,left_surd,right_surd,left_dec,right_dec\n";
    for (const Gap& g : gaps)
      std::cout << g.k << "," << (g.generation == 2 ? std::to_string(g.n) : "") << ",\""
                << g.left.str() << "\",\"" << g.right.str() << "\"," << g.left.decimal(9)
                << "," << g.right.decimal(9) << "\n";
  }
  return 0;
}

int cmd_verify(int only, int oracle_depth) {
  OrbitGraph b7 = find_b7();
  VerifyOptions opt;
  opt.only_criterion = only;
  opt.oracle_depth = oracle_depth;
  std::vector<CriterionResult> results = run_verification(b7, opt);
  bool all = true;
  for (const CriterionResult& c : results) {
    bool pass = c.pass();
    all = all && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.number << ": "
              << c.title << "\n";
    for (const CheckItem& it : c.items) {
      if (it.pass && pass) continue;  // itemize only failing criteria
      std::cout << "    " << (it.pass ? "[ok]   " : "[FAIL] ") << it.id;
      if (!it.detail.empty()) std::cout << "  (" << it.detail << ")";
      std::cout << "\n";
    }
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* env = std::getenv("ORIGAMI_SPECTRUM_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
#endif
  CLI::App app{"Lagrange spectrum of 7-square origamis: exact values, orbit "
               "graph, gap tables"};
  app.require_subcommand(1);

  std::string seed_file, dot_file, json_file, format = "text", alpha_text;
  bool all_orbits = false, min_starts = false, all_starts = false, torus = false;
  int start = 0, oracle_depth = 0, only = 0, depth = 40;
  long long k_max = 10, n_max = 5;

  CLI::App* orbit = app.add_subcommand("orbit", "derive the 36-element orbit");
  orbit->add_option("--seed-file", seed_file, "origami text file to seed from");
  orbit->add_option("--dot", dot_file, "write DOT graph ('-' for stdout)");
  orbit->add_option("--json", json_file, "write JSON dump ('-' for stdout)");
  orbit->add_flag("--all-orbits", all_orbits, "list all 7-square H(2) orbit sizes");

  CLI::App* lag = app.add_subcommand("lagrange", "exact Lagrange value of a slope");
  lag->add_option("alpha", alpha_text, "continued fraction, e.g. [;(1,3)]")->required();
  lag->add_option("--start", start, "orbit vertex index");
  lag->add_flag("--min", min_starts, "minimize over all starting vertices");
  lag->add_flag("--all", all_starts, "list all starting vertices");
  lag->add_flag("--torus", torus, "classical value on the square torus");
  lag->add_option("--format", format, "text or json");
  lag->add_option("--seed-file", seed_file, "origami text file to seed from");
  lag->add_option("--oracle-depth", oracle_depth, "also run the truncation oracle");

  CLI::App* gaps = app.add_subcommand("gaps", "first/second generation gap table");
  gaps->add_option("--k-max", k_max, "largest first-generation index");
  gaps->add_option("--n-max", n_max, "largest second-generation index");
  gaps->add_option("--format", format, "csv or json");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--item", only, "single criterion number (1..9)");
  verify->add_option("--oracle-depth", depth, "approximant depth for the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(seed_file, dot_file, json_file, all_orbits);
    if (lag->parsed())
      return cmd_lagrange(alpha_text, start, min_starts, all_starts, torus, format,
                          seed_file, oracle_depth);
    if (gaps->parsed()) return cmd_gaps(k_max, n_max, format);
    if (verify->parsed()) return cmd_verify(only, depth);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
