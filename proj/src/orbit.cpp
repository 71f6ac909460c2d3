#include "ogspec/orbit.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ogspec {

namespace {

OrbitGraph build_graph(std::set<Origami> canon_forms) {
  OrbitGraph g;
  g.vertices.assign(canon_forms.begin(), canon_forms.end());
  int n = (int)g.vertices.size();
  g.t_succ.resize(n);
  g.t_pred.resize(n);
  g.r_img.resize(n);
  g.m.resize(n);
  g.cusp_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Origami& o = g.vertices[i];
    g.t_succ[i] = g.index_of(o.act({GL2Letter::T}));
    g.r_img[i] = g.index_of(o.act({GL2Letter::R}));
    if (g.t_succ[i] < 0 || g.r_img[i] < 0)
      throw std::logic_error("orbit set not closed under the action");
    try {
      g.m[i] = o.horizontal_multiplicity();
    } catch (const std::domain_error&) {
      g.m[i] = 1;  // torus: no singularities, every direction has degree 1
    }
  }
  for (int i = 0; i < n; ++i) g.t_pred[g.t_succ[i]] = i;
  for (int i = 0; i < n; ++i) {
    if (g.cusp_of[i] >= 0) continue;
    std::vector<int> cyc;
    int j = i;
    while (g.cusp_of[j] < 0) {
      g.cusp_of[j] = (int)g.cusps.size();
      cyc.push_back(j);
      j = g.t_succ[j];
    }
    g.cusps.push_back(std::move(cyc));
  }
  return g;
}

}  // namespace

int OrbitGraph::index_of(const Origami& canonical_form) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), canonical_form);
  if (it == vertices.end() || !(*it == canonical_form)) return -1;
  return (int)(it - vertices.begin());
}

std::vector<int> OrbitGraph::cusp_widths() const {
  std::vector<int> w;
  for (const auto& c : cusps) w.push_back((int)c.size());
  std::sort(w.rbegin(), w.rend());
  return w;
}

int OrbitGraph::max_multiplicity() const {
  return *std::max_element(m.begin(), m.end());
}

OrbitGraph enumerate_orbit(const Origami& seed) {
  if (!seed.connected()) throw std::domain_error("not connected");
  if (!seed.is_primitive())
    throw std::domain_error(
        "seed is not primitive: the orbit does not stay inside a fixed "
        "square count");
  std::set<Origami> seen;
  std::vector<Origami> stack{seed.canonical()};
  seen.insert(stack.back());
  while (!stack.empty()) {
    Origami o = std::move(stack.back());
    stack.pop_back();
    for (GL2Letter gliter : {GL2Letter::T, GL2Letter::TInv, GL2Letter::R}) {
      Origami img = o.act({gliter});
      if (seen.insert(img).second) stack.push_back(img);
    }
  }
  return build_graph(std::move(seen));
}

std::vector<OrbitGraph> orbits_of_stratum(int n_squares, const std::vector<int>& stratum) {
  // h runs over cycle-type representatives (canonical forms are relabeling
  // invariant), v over all permutations
  std::vector<int> base(n_squares);
  for (int k = 0; k < n_squares; ++k) base[k] = k;
  std::set<std::vector<int>> seen_types;
  std::vector<Permutation> reps;
  {
    std::vector<int> perm = base;
    do {
      Permutation p{std::vector<int>(perm)};
      std::vector<int> type;
      for (const auto& c : p.cycles()) type.push_back((int)c.size());
      std::sort(type.begin(), type.end());
      if (seen_types.insert(type).second) reps.push_back(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::set<Origami> all;
  std::vector<int> perm = base;
  do {
    Permutation v{std::vector<int>(perm)};
    for (const Permutation& h : reps) {
      Origami o(h, v);
      if (!o.connected()) continue;
      if (o.stratum() != stratum) continue;
      if (!o.is_primitive()) continue;
      all.insert(o.canonical());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<OrbitGraph> out;
  std::set<Origami> left = all;
  while (!left.empty()) {
    OrbitGraph g = enumerate_orbit(*left.begin());
    for (const Origami& o : g.vertices) left.erase(o);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitGraph& a, const OrbitGraph& b) { return a.size() < b.size(); });
  return out;
}

OrbitGraph find_b7() {
  std::vector<OrbitGraph> orbits = orbits_of_stratum(7, {2});
  const OrbitGraph* b7 = nullptr;
  bool has54 = false;
  for (const auto& g : orbits) {
    if (g.size() == 36) b7 = &g;
    if (g.size() == 54) has54 = true;
  }
  if (!b7 || !has54)
    throw std::runtime_error(
        "convention mismatch: expected orbits of sizes 36 and 54 among the "
        "primitive 7-square surfaces");
  return *b7;
}

StepResult step(const OrbitGraph& g, CFPathState s, long long entry) {
  if (entry < 1) throw std::invalid_argument("entry must be >= 1");
  StepResult out;
  int v = g.r_img[s.vertex];
  out.stops.reserve(entry);
  for (long long k = 0; k < entry; ++k) {
    v = s.positive ? g.t_succ[v] : g.t_pred[v];
    out.stops.push_back(v);
  }
  out.state = {v, !s.positive};
  return out;
}

PathCycle path_cycle(const OrbitGraph& g, int start_vertex, const CFExpansion& cf) {
  if (cf.is_rational()) throw std::domain_error("expansion has no periodic tail");
  PathCycle out;
  CFPathState s{start_vertex, true};
  for (long long a : cf.preperiod) {
    s = step(g, s, a).state;
    ++out.preperiod_steps;
  }
  int P = (int)cf.period.size();
  std::map<std::tuple<int, bool, int>, int> seen;
  std::vector<CycleNode> trail;
  int phase = 0;
  for (;;) {
    auto key = std::make_tuple(s.vertex, s.positive, phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.preperiod_steps += it->second;
      out.nodes.assign(trail.begin() + it->second, trail.end());
      break;
    }
    seen.emplace(key, (int)trail.size());
    StepResult r = step(g, s, cf.period[phase]);
    trail.push_back({s, phase, r.stops});
    s = r.state;
    phase = (phase + 1) % P;
  }
  std::set<int> sup;
  for (const auto& node : out.nodes) sup.insert(node.stops.back());
  out.support.assign(sup.begin(), sup.end());
  return out;
}

int rational_multiplicity(const OrbitGraph& g, int start_vertex, Int p, Int q) {
  if (q == 0) return g.m[start_vertex];  // co-slope infinity
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Int common = boost::multiprecision::gcd(abs(p), q);
  if (common > 1) {
    p /= common;
    q /= common;
  }
  // covariance: m(x; X) = m(x - a0; T^(-a0) X)
  Int a0 = floor_div(p, q);
  int v = start_vertex;
  long long v_width = (long long)g.cusps[g.cusp_of[v]].size();
  long long shift = (abs(a0) % v_width).convert_to<long long>();
  for (long long k = 0; k < shift; ++k) v = a0 > 0 ? g.t_pred[v] : g.t_succ[v];
  Int num = p - a0 * q;
  if (num == 0) return g.m[g.r_img[v]];  // co-slope 0: m(0; X) = m(inf; R X)
  // Euclid on num/q in (0,1), walking the entries; T powers are reduced
  // modulo the cusp width, so huge entries cost nothing
  CFPathState s{v, true};
  Int den = q;
  while (num != 0) {
    Int a = floor_div(den, num);
    int base = g.r_img[s.vertex];
    long long width = (long long)g.cusps[g.cusp_of[base]].size();
    long long steps = (a % width).convert_to<long long>();
    int vtx = base;
    for (long long k = 0; k < steps; ++k)
      vtx = s.positive ? g.t_succ[vtx] : g.t_pred[vtx];
    s = {vtx, !s.positive};
    Int rest = den - a * num;
    den = num;
    num = rest;
  }
  return g.m[g.r_img[s.vertex]];
}

std::string OrbitGraph::dot() const {
  std::ostringstream os;
  os << "digraph orbit {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < size(); ++i) {
    os << "  v" << i << " [label=\"" << i << "\\nw=" << cusps[cusp_of[i]].size()
       << " m=" << m[i] << "\"];\n";
  }
  for (int i = 0; i < size(); ++i)
    os << "  v" << i << " -> v" << t_succ[i] << ";\n";
  for (int i = 0; i < size(); ++i) {
    if (i < r_img[i])
      os << "  v" << i << " -> v" << r_img[i] << " [style=dashed, dir=none];\n";
    else if (i == r_img[i])
      os << "  v" << i << " -> v" << i << " [style=dashed, dir=none];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json OrbitGraph::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    nlohmann::json v = vertices[i].to_json();
    v["id"] = i;
    v["m"] = m[i];
    v["cusp"] = cusp_of[i];
    v["cusp_width"] = cusps[cusp_of[i]].size();
    verts.push_back(std::move(v));
  }
  return nlohmann::json{{"squares", squares()},
                        {"vertices", verts},
                        {"t_succ", t_succ},
                        {"r_img", r_img},
                        {"cusps", cusps}};
}

}  // namespace ogspec
