// Family constructors and catalogs: the bad/dangerous/almost-bad closures
// with replayable construction traces, the six forbidden fixtures with their
// regeneration oracles, and the 11/30-ratio machinery (G41, 30-augmentation,
// the families T and T-minus, the tree construction).
#include "tflab/families.hh"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "tflab/critical.hh"
#include "tflab/enumerate.hh"
#include "tflab/graph6.hh"
#include "tflab/iso.hh"

namespace tflab {
namespace {

void require_arg(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_prop(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

std::vector<int> degree2_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

SimpleGraph cycle_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return from_edges(k, e);
}

SimpleGraph isolated_vertices(int k) {
  SimpleGraph g;
  g.n = k;
  g.adj.resize(k);
  return g;
}

bool at_least_2_connected(const SimpleGraph& g) {
  ConnectivityClass c = connectivity_class(g);
  return c == ConnectivityClass::two || c == ConnectivityClass::three_plus;
}

const std::array<std::array<int, 3>, 6> kPerms3 = {{{{0, 1, 2}},
                                                    {{0, 2, 1}},
                                                    {{1, 0, 2}},
                                                    {{1, 2, 0}},
                                                    {{2, 0, 1}},
                                                    {{2, 1, 0}}}};

// The six ways to split {a1,b1,a2,b2} evenly over the two new sum vertices.
const std::array<std::array<int, 4>, 6> kSumAttachPatterns = {{{{0, 0, 1, 1}},
                                                               {{0, 1, 0, 1}},
                                                               {{0, 1, 1, 0}},
                                                               {{1, 0, 0, 1}},
                                                               {{1, 0, 1, 0}},
                                                               {{1, 1, 0, 0}}}};

std::optional<Corner> make_corner(const SimpleGraph& g, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a >= g.n || b >= g.n || c >= g.n)
    return std::nullopt;
  if (a == b || a == c || b == c) return std::nullopt;
  if (g.degree(a) != 3 || g.degree(b) != 2 || g.degree(c) != 2)
    return std::nullopt;
  if (!g.has_edge(a, b) || !g.has_edge(b, c) || g.has_edge(a, c))
    return std::nullopt;
  Corner k;
  k.a = a;
  k.b = b;
  k.c = c;
  int idx = 0;
  for (int w : g.adj[a])
    if (w != b) k.iface[idx++] = w;
  for (int w : g.adj[c])
    if (w != b) k.iface[idx++] = w;
  if (idx != 3) return std::nullopt;
  if (k.iface[2] == k.iface[0] || k.iface[2] == k.iface[1])
    return std::nullopt;
  return k;
}

// Edges lying on every 6-cycle; empty when there are no 6-cycles (callers
// that care about that case check first).
std::vector<std::pair<int, int>> edges_in_all_6cycles(const SimpleGraph& g) {
  auto cycles = cycles_of_length(g, 6);
  if (cycles.empty()) return {};
  std::map<std::pair<int, int>, size_t> count;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      count[{std::min(u, v), std::max(u, v)}]++;
    }
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, k] : count)
    if (k == cycles.size()) out.push_back(e);
  return out;
}

struct CatalogCache {
  std::vector<CatalogEntry> entries;
  std::set<std::string> keys;
};

void sort_catalog(std::vector<CatalogEntry>& entries) {
  std::vector<std::pair<std::string, CatalogEntry>> tmp;
  tmp.reserve(entries.size());
  for (auto& e : entries) tmp.push_back({canonical_key(e.g), std::move(e)});
  std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) {
    if (a.second.g.n != b.second.g.n) return a.second.g.n < b.second.g.n;
    return a.first < b.first;
  });
  entries.clear();
  for (auto& [key, e] : tmp) entries.push_back(std::move(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// Corners and the 8-augmentation
// ---------------------------------------------------------------------------

std::vector<Corner> find_corners(const SimpleGraph& g) {
  require_arg(max_degree_at_most(g, 3), "find_corners: graph must be subcubic");
  std::vector<Corner> out;
  for (int b = 0; b < g.n; ++b) {
    if (g.degree(b) != 2) continue;
    for (int a : g.adj[b]) {
      if (g.degree(a) != 3) continue;
      int c = (g.adj[b][0] == a) ? g.adj[b][1] : g.adj[b][0];
      if (auto k = make_corner(g, a, b, c)) out.push_back(*k);
    }
  }
  std::sort(out.begin(), out.end(), [](const Corner& x, const Corner& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  return out;
}

SimpleGraph b8() {
  return from_edges(8, {{0, 1},
                        {0, 2},
                        {1, 3},
                        {2, 4},
                        {2, 5},
                        {3, 4},
                        {3, 5},
                        {4, 6},
                        {5, 7},
                        {6, 7}});
}

const SimpleGraph& augmentation_gadget() {
  static const SimpleGraph gadget = [] {
    SimpleGraph h = from_edges(11, {{0, 3},
                                    {1, 3},
                                    {1, 4},
                                    {2, 4},
                                    {2, 5},
                                    {0, 5},
                                    {3, 6},
                                    {4, 7},
                                    {5, 8},
                                    {6, 7},
                                    {7, 8},
                                    {8, 9},
                                    {9, 10},
                                    {6, 10}});
    require_prop(is_triangle_free(h) && max_degree_at_most(h, 3) &&
                     is_connected(h),
                 "gadget: must be a connected triangle-free subcubic graph");
    auto dc = degree_counts(h);
    require_prop(dc[2] == 5 && dc[3] == 6,
                 "gadget: must have five degree-2 and six degree-3 vertices");
    SimpleGraph ind = induced_subgraph(h, degree2_vertices(h));
    require_prop(ind.m == 1,
                 "gadget: degree-2 vertices must contain exactly one adjacent "
                 "pair");
    require_prop(alpha(h).size == 5, "gadget: independence number must be 5");
    for (int v : {0, 1, 2})
      require_prop(forall_mis_contain(h, v),
                   "gadget: every maximum independent set must contain each "
                   "attachment vertex");
    require_prop(alpha(delete_vertices(h, {0, 1, 2}).g).size >= 4,
                 "gadget: removing the attachments must leave independence "
                 "number at least 4");
    return h;
  }();
  return gadget;
}

SimpleGraph augment8(const SimpleGraph& g, const Corner& corner,
                     const std::array<int, 3>& matching) {
  require_arg(is_triangle_free(g) && max_degree_at_most(g, 3),
              "augment8: graph must be triangle-free and subcubic");
  auto fresh = make_corner(g, corner.a, corner.b, corner.c);
  require_arg(fresh.has_value() && fresh->iface == corner.iface,
              "augment8: corner does not match the graph");
  std::array<int, 3> sorted = matching;
  std::sort(sorted.begin(), sorted.end());
  require_arg(sorted == std::array<int, 3>{{0, 1, 2}},
              "augment8: matching must be a permutation of {0,1,2}");

  long long alpha_before = alpha(g).size;
  Rational24 lb_before = lb(g);

  auto del = delete_vertices(g, {corner.a, corner.b, corner.c});
  SimpleGraph h = disjoint_union(del.g, augmentation_gadget());
  int t = del.g.n;
  for (int k = 0; k < 3; ++k)
    h = add_edge(h, del.old_to_new[corner.iface[k]], t + matching[k]);

  require_prop(is_triangle_free(h), "augment8: result must stay triangle-free");
  require_prop(alpha(h).size == alpha_before + 3,
               "augment8: independence number must grow by exactly 3");
  require_prop(lb(h).num == lb_before.num + 72,
               "augment8: lb must grow by exactly 3");
  return h;
}

// ---------------------------------------------------------------------------
// Construction traces
// ---------------------------------------------------------------------------

bool TraceStep::operator==(const TraceStep& o) const {
  return op == o.op && args == o.args && operands == o.operands;
}

bool ConstructionTrace::operator==(const ConstructionTrace& o) const {
  return base == o.base && steps == o.steps;
}

namespace {

SimpleGraph parse_tree_spec(const std::string& spec) {
  require_arg(spec.rfind("tree:", 0) == 0, "tree spec must start with 'tree:'");
  size_t colon = spec.find(':', 5);
  require_arg(colon != std::string::npos, "tree spec missing vertex count");
  int n = 0;
  try {
    n = std::stoi(spec.substr(5, colon - 5));
  } catch (const std::exception&) {
    throw std::invalid_argument("tree spec has a malformed vertex count");
  }
  std::vector<std::pair<int, int>> edges;
  std::string rest = spec.substr(colon + 1);
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t dash = item.find('-');
    require_arg(dash != std::string::npos, "tree spec edge missing '-'");
    try {
      edges.push_back(
          {std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("tree spec has a malformed edge");
    }
  }
  return from_edges(n, edges);
}

nlohmann::json trace_json(const ConstructionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : t.steps) {
    nlohmann::json js;
    js["op"] = s.op;
    js["args"] = s.args;
    if (!s.operands.empty()) {
      nlohmann::json ops = nlohmann::json::array();
      for (const ConstructionTrace& o : s.operands) ops.push_back(trace_json(o));
      js["operands"] = std::move(ops);
    }
    steps.push_back(std::move(js));
  }
  nlohmann::json j;
  j["base"] = t.base;
  j["steps"] = std::move(steps);
  return j;
}

ConstructionTrace trace_from(const nlohmann::json& j) {
  ConstructionTrace t;
  t.base = j.at("base").get<std::string>();
  for (const auto& js : j.at("steps")) {
    TraceStep s;
    s.op = js.at("op").get<std::string>();
    s.args = js.at("args").get<std::vector<int>>();
    if (js.contains("operands"))
      for (const auto& jo : js.at("operands")) s.operands.push_back(trace_from(jo));
    t.steps.push_back(std::move(s));
  }
  return t;
}

struct PathContraction {
  SimpleGraph g;
  std::vector<int> old_to_new;
};

PathContraction contract_path_impl(const SimpleGraph& g, const NicePath& path) {
  const auto& p = path.p;
  for (int v : p)
    require_arg(v >= 0 && v < g.n, "nice-path contraction: vertex out of range");
  require_arg(p[0] != p[3] && p[0] != p[1] && p[0] != p[2] && p[1] != p[2] &&
                  p[1] != p[3] && p[2] != p[3],
              "nice-path contraction: vertices must be distinct");
  require_arg(g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) &&
                  g.has_edge(p[2], p[3]),
              "nice-path contraction: path edges missing");
  require_arg(g.degree(p[1]) == 2 && g.degree(p[2]) == 2,
              "nice-path contraction: interior vertices must have degree 2");
  require_arg(!g.has_edge(p[0], p[3]),
              "nice-path contraction: endpoints already adjacent");
  auto del = delete_vertices(g, {p[1], p[2]});
  SimpleGraph r = add_edge(del.g, del.old_to_new[p[0]], del.old_to_new[p[3]]);
  return {std::move(r), std::move(del.old_to_new)};
}

}  // namespace

SimpleGraph replay(const ConstructionTrace& trace) {
  SimpleGraph g;
  if (trace.base == "B8")
    g = b8();
  else if (trace.base == "C5")
    g = cycle_graph(5);
  else if (trace.base == "F11")
    g = forbidden_six().f11;
  else if (trace.base.rfind("tree:", 0) == 0)
    g = fl_construction(parse_tree_spec(trace.base));
  else
    throw std::invalid_argument("replay: unknown base '" + trace.base + "'");

  for (const TraceStep& s : trace.steps) {
    const std::vector<int>& a = s.args;
    if (s.op == "augment8") {
      require_arg(a.size() == 6 && s.operands.empty(),
                  "replay: augment8 expects 6 args and no operands");
      auto k = make_corner(g, a[0], a[1], a[2]);
      require_arg(k.has_value(), "replay: augment8 corner is invalid here");
      g = augment8(g, *k, {{a[3], a[4], a[5]}});
    } else if (s.op == "sum") {
      require_arg(a.size() == 14 && s.operands.size() == 1,
                  "replay: sum expects 14 args and one operand");
      SimpleGraph other = replay(s.operands[0]);
      SumWiring w;
      for (int i = 0; i < 5; ++i) {
        w.label1[i] = a[i];
        w.label2[i] = a[5 + i];
      }
      for (int i = 0; i < 4; ++i) w.attach[i] = a[10 + i];
      g = sum_dangerous(g, other, w);
    } else if (s.op == "join") {
      require_arg(a.size() == 6 && s.operands.size() == 1,
                  "replay: join expects 6 args and one operand");
      SimpleGraph other = replay(s.operands[0]);
      auto k1 = make_corner(g, a[0], a[1], a[2]);
      auto k2 = make_corner(other, a[3], a[4], a[5]);
      require_arg(k1.has_value() && k2.has_value(),
                  "replay: join corners are invalid here");
      g = join_bad(g, *k1, other, *k2);
    } else if (s.op == "contract") {
      require_arg(a.size() == 4 && s.operands.empty(),
                  "replay: contract expects 4 args and no operands");
      NicePath p;
      p.p = {{a[0], a[1], a[2], a[3]}};
      g = contract_path_impl(g, p).g;
    } else if (s.op == "thirty_augment") {
      require_arg(a.size() == 11 && s.operands.empty(),
                  "replay: thirty_augment expects 11 args and no operands");
      g = thirty_augment(g, std::vector<int>(a.begin(), a.end()));
    } else {
      throw std::invalid_argument("replay: unknown op '" + s.op + "'");
    }
  }
  return g;
}

std::string trace_to_json(const ConstructionTrace& trace) {
  return trace_json(trace).dump();
}

ConstructionTrace trace_from_json(const std::string& line) {
  return trace_from(nlohmann::json::parse(line));
}

void export_catalog(const std::vector<CatalogEntry>& catalog,
                    std::ostream& graph6_out, std::ostream& traces_out) {
  for (const CatalogEntry& e : catalog) {
    graph6_out << to_graph6(e.g) << '\n';
    traces_out << trace_to_json(e.trace) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Bad graphs
// ---------------------------------------------------------------------------

namespace {

CatalogCache build_bad(int max_n) {
  CatalogCache c;
  SimpleGraph base = b8();
  c.keys.insert(canonical_key(base));
  c.entries.push_back({std::move(base), {"B8", {}}});
  for (size_t i = 0; i < c.entries.size(); ++i) {
    SimpleGraph g = c.entries[i].g;
    ConstructionTrace tr = c.entries[i].trace;
    if (g.n + 8 > max_n) continue;
    for (const Corner& k : find_corners(g)) {
      for (const auto& perm : kPerms3) {
        SimpleGraph h = augment8(g, k, perm);
        if (!c.keys.insert(canonical_key(h)).second) continue;
        ConstructionTrace t2 = tr;
        t2.steps.push_back(
            {"augment8", {k.a, k.b, k.c, perm[0], perm[1], perm[2]}, {}});
        c.entries.push_back({std::move(h), std::move(t2)});
      }
    }
  }
  sort_catalog(c.entries);
  return c;
}

const CatalogCache& bad_cache(int max_n) {
  require_arg(max_n >= 8, "enumerate_bad: max_n must be at least 8");
  static std::map<int, CatalogCache> store;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(max_n);
  if (it == store.end()) it = store.emplace(max_n, build_bad(max_n)).first;
  return it->second;
}

// The two 16-vertex bad graphs; first = the one with no maximum independent
// set avoiding all four degree-2 vertices.
const std::pair<SimpleGraph, SimpleGraph>& b16_pair() {
  static const std::pair<SimpleGraph, SimpleGraph> pr = [] {
    std::vector<SimpleGraph> sixteens;
    for (const CatalogEntry& e : bad_cache(16).entries)
      if (e.g.n == 16) sixteens.push_back(e.g);
    require_prop(sixteens.size() == 2,
                 "bad catalog: expected exactly two 16-vertex members");
    auto avoids_all = [](const SimpleGraph& g) {
      return has_mis_avoiding(g, degree2_vertices(g)).possible;
    };
    bool a0 = avoids_all(sixteens[0]);
    bool a1 = avoids_all(sixteens[1]);
    require_prop(a0 != a1,
                 "bad catalog: exactly one 16-vertex member should have a "
                 "maximum independent set avoiding all degree-2 vertices");
    if (a0) std::swap(sixteens[0], sixteens[1]);
    return std::make_pair(sixteens[0], sixteens[1]);
  }();
  return pr;
}

}  // namespace

const std::vector<CatalogEntry>& enumerate_bad(int max_n) {
  return bad_cache(max_n).entries;
}

bool is_bad(const SimpleGraph& g, int max_n) {
  require_arg(g.n <= max_n, "is_bad: graph exceeds the catalog cap");
  return bad_cache(max_n).keys.count(canonical_key(g)) != 0;
}

SimpleGraph b16_1() { return b16_pair().first; }
SimpleGraph b16_2() { return b16_pair().second; }

void check_bad_properties(const SimpleGraph& b) {
  require_prop(is_triangle_free(b), "bad properties: must be triangle-free");
  require_prop(max_degree_at_most(b, 3), "bad properties: must be subcubic");
  require_prop(at_least_2_connected(b), "bad properties: must be 2-connected");
  auto dc = degree_counts(b);
  require_prop(dc[0] == 0 && dc[1] == 0,
               "bad properties: minimum degree must be 2");
  require_prop(dc[2] == 4,
               "bad properties: must have exactly four degree-2 vertices");
  std::vector<int> d2 = degree2_vertices(b);
  SimpleGraph ind = induced_subgraph(b, d2);
  require_prop(ind.m == 2 && max_degree_at_most(ind, 1),
               "bad properties: degree-2 vertices must induce a size-two "
               "matching");
  require_prop(24 * alpha(b).size == lb(b).num - 2,
               "bad properties: independence number must equal lb - 1/12");
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> t;
    for (int i = 0; i < 4; ++i)
      if (i != skip) t.push_back(d2[i]);
    require_prop(has_mis_avoiding(b, t).possible,
                 "bad properties: some maximum independent set must avoid any "
                 "three degree-2 vertices");
  }
  bool like_base = isomorphic(b, b8()) || isomorphic(b, b16_1());
  bool avoid_all = has_mis_avoiding(b, d2).possible;
  require_prop(avoid_all == !like_base,
               "bad properties: all four degree-2 vertices must be avoidable "
               "exactly for members other than B8 and b16_1");
  if (!like_base) {
    require_prop(!cycles_of_length(b, 6).empty(),
                 "bad properties: expected 6-cycles to exist");
    require_prop(edges_in_all_6cycles(b).empty(),
                 "bad properties: no edge may lie in every 6-cycle");
  }
}

// ---------------------------------------------------------------------------
// Dangerous graphs
// ---------------------------------------------------------------------------

namespace {

// Structural share of the dangerous property suite (everything except the
// avoidance queries); returns the independence number for reuse.
long long validate_dangerous_structure(const SimpleGraph& g) {
  require_prop(is_triangle_free(g),
               "dangerous properties: must be triangle-free");
  require_prop(max_degree_at_most(g, 3),
               "dangerous properties: must be subcubic");
  require_prop(at_least_2_connected(g),
               "dangerous properties: must be 2-connected");
  auto dc = degree_counts(g);
  require_prop(dc[0] == 0 && dc[1] == 0 && dc[2] == 5,
               "dangerous properties: must have exactly five degree-2 "
               "vertices and minimum degree 2");
  if (!isomorphic(g, cycle_graph(5))) {
    SimpleGraph ind = induced_subgraph(g, degree2_vertices(g));
    require_prop(ind.m == 2 && max_degree_at_most(ind, 1),
                 "dangerous properties: degree-2 vertices must induce an "
                 "isolated vertex plus a size-two matching");
  }
  long long a = alpha(g).size;
  require_prop(24 * a >= lb(g).num,
               "dangerous properties: independence number must be at least lb");
  require_prop(!cycles_of_length(g, 5).empty(),
               "dangerous properties: must contain a 5-cycle");
  return a;
}

void check_sum_labels(const SimpleGraph& d, const std::array<int, 5>& lab,
                      const char* side) {
  for (int v : lab)
    require_arg(v >= 0 && v < d.n,
                std::string("sum_dangerous: ") + side + " label out of range");
  std::vector<int> sorted(lab.begin(), lab.end());
  std::sort(sorted.begin(), sorted.end());
  require_arg(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
              std::string("sum_dangerous: ") + side + " labels must be distinct");
  require_arg(sorted == degree2_vertices(d),
              std::string("sum_dangerous: ") + side +
                  " labels must cover exactly the degree-2 vertices");
  require_arg(d.has_edge(lab[3], lab[4]),
              std::string("sum_dangerous: ") + side +
                  " labels d,e must be adjacent");
}

// All a,b,c,d,e labelings of a five-degree-2-vertex graph: {d,e} ranges over
// the adjacent degree-2 pairs, c over the remaining three, a,b over the last
// two in both orders.
std::vector<std::array<int, 5>> sum_labelings(const SimpleGraph& d) {
  std::vector<int> d2 = degree2_vertices(d);
  std::vector<std::array<int, 5>> out;
  if (d2.size() != 5) return out;
  for (size_t i = 0; i < d2.size(); ++i) {
    for (size_t j = i + 1; j < d2.size(); ++j) {
      if (!d.has_edge(d2[i], d2[j])) continue;
      std::vector<int> rest;
      for (size_t k = 0; k < d2.size(); ++k)
        if (k != i && k != j) rest.push_back(d2[k]);
      for (int ci = 0; ci < 3; ++ci) {
        std::vector<int> ab;
        for (int k = 0; k < 3; ++k)
          if (k != ci) ab.push_back(rest[k]);
        out.push_back({{ab[0], ab[1], rest[ci], d2[i], d2[j]}});
        out.push_back({{ab[1], ab[0], rest[ci], d2[i], d2[j]}});
      }
    }
  }
  return out;
}

}  // namespace

SimpleGraph sum_dangerous(const SimpleGraph& d1, const SimpleGraph& d2,
                          const SumWiring& wiring) {
  check_sum_labels(d1, wiring.label1, "first");
  check_sum_labels(d2, wiring.label2, "second");
  int ones = 0;
  for (int t : wiring.attach) {
    require_arg(t == 0 || t == 1,
                "sum_dangerous: attach entries must be 0 (v1) or 1 (v2)");
    ones += t;
  }
  require_arg(ones == 2,
              "sum_dangerous: each of v1,v2 must take exactly two vertices");

  SimpleGraph g = disjoint_union(d1, d2);
  const int off = d1.n;
  const int a1 = wiring.label1[0], b1 = wiring.label1[1], c1 = wiring.label1[2];
  const int a2 = wiring.label2[0] + off, b2 = wiring.label2[1] + off,
            c2 = wiring.label2[2] + off;
  const std::array<int, 4> attach_verts{{a1, b1, a2, b2}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      require_arg(wiring.attach[i] != wiring.attach[j] ||
                      !g.has_edge(attach_verts[i], attach_verts[j]),
                  "sum_dangerous: attaching two adjacent vertices to the "
                  "same new vertex would create a triangle");

  g = disjoint_union(g, isolated_vertices(3));
  const int u = d1.n + d2.n, v1 = u + 1, v2 = u + 2;
  g = add_edge(g, u, v1);
  g = add_edge(g, u, v2);
  for (int i = 0; i < 4; ++i)
    g = add_edge(g, wiring.attach[i] == 0 ? v1 : v2, attach_verts[i]);
  g = add_edge(g, c1, c2);

  long long a = validate_dangerous_structure(g);
  require_prop(lb(g).num == lb(d1).num + lb(d2).num + 24,
               "sum_dangerous: lb must grow by exactly 1");
  require_prop(a >= alpha(d1).size + alpha(d2).size + 1,
               "sum_dangerous: independence number must grow by at least 1");
  return g;
}

SimpleGraph join_bad(const SimpleGraph& h1, const Corner& corner1,
                     const SimpleGraph& h2, const Corner& corner2) {
  require_arg(is_bad(h1, std::max(8, h1.n)),
              "join_bad: first operand is not a bad graph");
  require_arg(is_bad(h2, std::max(8, h2.n)),
              "join_bad: second operand is not a bad graph");
  auto k1 = make_corner(h1, corner1.a, corner1.b, corner1.c);
  auto k2 = make_corner(h2, corner2.a, corner2.b, corner2.c);
  require_arg(k1.has_value() && k1->iface == corner1.iface,
              "join_bad: first corner does not match the graph");
  require_arg(k2.has_value() && k2->iface == corner2.iface,
              "join_bad: second corner does not match the graph");

  const int off = h1.n;
  int y2 = -1;
  for (int w : h2.adj[corner2.c])
    if (w != corner2.b) y2 = w;

  SimpleGraph g = disjoint_union(h1, h2);
  auto del = delete_vertices(
      g, {corner1.b, corner2.b + off, corner2.c + off});
  SimpleGraph r = add_edge(del.g, del.old_to_new[corner1.c],
                           del.old_to_new[corner2.a + off]);
  r = add_edge(r, del.old_to_new[corner1.a], del.old_to_new[y2 + off]);

  long long a = validate_dangerous_structure(r);
  require_prop(lb(r).num == lb(h1).num + lb(h2).num - 28,
               "join_bad: lb must drop by exactly 1 + 1/6");
  require_prop(a >= alpha(h1).size + alpha(h2).size - 1,
               "join_bad: independence number must be at least the operand "
               "sum minus 1");
  return r;
}

namespace {

CatalogCache build_dangerous(int max_n) {
  CatalogCache c;
  SimpleGraph c5 = cycle_graph(5);
  c.keys.insert(canonical_key(c5));
  c.entries.push_back({std::move(c5), {"C5", {}}});

  auto insert = [&c](SimpleGraph h, ConstructionTrace tr, TraceStep step) {
    if (!c.keys.insert(canonical_key(h)).second) return;
    tr.steps.push_back(std::move(step));
    c.entries.push_back({std::move(h), std::move(tr)});
  };

  // Joins of two bad graphs (operands come from the bad catalog, so these do
  // not depend on the worklist below).
  if (max_n >= 13) {
    const auto& bad = bad_cache(std::max(8, max_n - 5)).entries;
    for (const CatalogEntry& e1 : bad) {
      for (const CatalogEntry& e2 : bad) {
        if (e1.g.n + e2.g.n - 3 > max_n) continue;
        for (const Corner& ka : find_corners(e1.g)) {
          for (const Corner& kb : find_corners(e2.g)) {
            SimpleGraph h = join_bad(e1.g, ka, e2.g, kb);
            TraceStep step{"join",
                           {ka.a, ka.b, ka.c, kb.a, kb.b, kb.c},
                           {e2.trace}};
            insert(std::move(h), e1.trace, std::move(step));
          }
        }
      }
    }
  }

  // Closure under 8-augmentation and sums; a pair is handled when its
  // later-indexed member is processed.
  for (size_t idx = 0; idx < c.entries.size(); ++idx) {
    SimpleGraph g = c.entries[idx].g;
    ConstructionTrace tr = c.entries[idx].trace;
    if (g.n + 8 <= max_n) {
      for (const Corner& k : find_corners(g)) {
        for (const auto& perm : kPerms3) {
          SimpleGraph h = augment8(g, k, perm);
          insert(std::move(h), tr,
                 {"augment8", {k.a, k.b, k.c, perm[0], perm[1], perm[2]}, {}});
        }
      }
    }
    for (size_t jdx = 0; jdx <= idx; ++jdx) {
      SimpleGraph g2 = c.entries[jdx].g;
      ConstructionTrace tr2 = c.entries[jdx].trace;
      if (g.n + g2.n + 3 > max_n) continue;
      for (const auto& l1 : sum_labelings(g)) {
        for (const auto& l2 : sum_labelings(g2)) {
          for (const auto& at : kSumAttachPatterns) {
            // Skip assignments that would close a triangle between two
            // adjacent attachment vertices landed on the same new vertex.
            const std::array<int, 4> verts{{l1[0], l1[1], l2[0] + g.n,
                                            l2[1] + g.n}};
            bool triangle = false;
            for (int i = 0; i < 4 && !triangle; ++i)
              for (int j = i + 1; j < 4 && !triangle; ++j)
                if (at[i] == at[j]) {
                  int x = verts[i], y = verts[j];
                  bool same_first = x < g.n && y < g.n;
                  bool same_second = x >= g.n && y >= g.n;
                  if (same_first && g.has_edge(x, y)) triangle = true;
                  if (same_second && g2.has_edge(x - g.n, y - g.n))
                    triangle = true;
                }
            if (triangle) continue;
            SumWiring w;
            w.label1 = l1;
            w.label2 = l2;
            w.attach = at;
            SimpleGraph h = sum_dangerous(g, g2, w);
            TraceStep step{"sum",
                           {l1[0], l1[1], l1[2], l1[3], l1[4], l2[0], l2[1],
                            l2[2], l2[3], l2[4], at[0], at[1], at[2], at[3]},
                           {tr2}};
            insert(std::move(h), tr, std::move(step));
          }
        }
      }
    }
  }
  sort_catalog(c.entries);
  return c;
}

const CatalogCache& dangerous_cache(int max_n) {
  require_arg(max_n >= 5, "enumerate_dangerous: max_n must be at least 5");
  static std::map<int, CatalogCache> store;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(max_n);
  if (it == store.end()) it = store.emplace(max_n, build_dangerous(max_n)).first;
  return it->second;
}

}  // namespace

const std::vector<CatalogEntry>& enumerate_dangerous(int max_n) {
  return dangerous_cache(max_n).entries;
}

bool is_dangerous(const SimpleGraph& g, int max_n) {
  require_arg(g.n <= max_n, "is_dangerous: graph exceeds the catalog cap");
  return dangerous_cache(max_n).keys.count(canonical_key(g)) != 0;
}

void check_dangerous_properties(const SimpleGraph& d) {
  validate_dangerous_structure(d);
  Rational24 bound = lb(d);
  require_prop(bound.is_integer(),
               "dangerous properties: lb must be an integer");
  long long target = bound.floor();
  std::vector<int> d2 = degree2_vertices(d);
  // Every two degree-2 vertices are avoidable by an independent set of size
  // lb; likewise every three whose complement pair is non-adjacent.
  for (size_t i = 0; i < d2.size(); ++i) {
    for (size_t j = i + 1; j < d2.size(); ++j) {
      SimpleGraph rest = delete_vertices(d, {d2[i], d2[j]}).g;
      require_prop(alpha(rest).size >= target,
                   "dangerous properties: an independent set of size lb must "
                   "avoid any two degree-2 vertices");
    }
  }
  for (size_t i = 0; i < d2.size(); ++i) {
    for (size_t j = i + 1; j < d2.size(); ++j) {
      for (size_t k = j + 1; k < d2.size(); ++k) {
        std::vector<int> remaining;
        for (size_t l = 0; l < d2.size(); ++l)
          if (l != i && l != j && l != k) remaining.push_back(d2[l]);
        if (d.has_edge(remaining[0], remaining[1])) continue;
        SimpleGraph rest = delete_vertices(d, {d2[i], d2[j], d2[k]}).g;
        require_prop(alpha(rest).size >= target,
                     "dangerous properties: an independent set of size lb "
                     "must avoid any three degree-2 vertices whose "
                     "complement pair is non-adjacent");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Almost-bad graphs
// ---------------------------------------------------------------------------

namespace {

std::vector<NicePath> nice_paths_impl(const SimpleGraph& g) {
  std::vector<NicePath> out;
  std::vector<int> d2 = degree2_vertices(g);
  for (size_t i = 0; i < d2.size(); ++i) {
    for (size_t j = i + 1; j < d2.size(); ++j) {
      int x = d2[i], y = d2[j];
      if (!g.has_edge(x, y)) continue;
      int p0 = (g.adj[x][0] == y) ? g.adj[x][1] : g.adj[x][0];
      int p3 = (g.adj[y][0] == x) ? g.adj[y][1] : g.adj[y][0];
      NicePath np;
      np.p = {{p0, x, y, p3}};
      out.push_back(np);
    }
  }
  return out;
}

}  // namespace

std::vector<NicePath> nice_paths(const SimpleGraph& b) {
  require_arg(is_bad(b, std::max(8, b.n)),
              "nice_paths: input is not in the bad catalog");
  std::vector<NicePath> out = nice_paths_impl(b);
  require_prop(out.size() == 2,
               "nice_paths: a bad graph must have exactly two nice paths");
  for (const NicePath& np : out) {
    std::array<int, 4> s = np.p;
    std::sort(s.begin(), s.end());
    require_prop(std::adjacent_find(s.begin(), s.end()) == s.end(),
                 "nice_paths: path vertices must be distinct");
  }
  return out;
}

SimpleGraph contract_nice_path(const SimpleGraph& b, const NicePath& path) {
  require_arg(is_bad(b, std::max(8, b.n)),
              "contract_nice_path: input is not in the bad catalog");
  return contract_path_impl(b, path).g;
}

namespace {

CatalogCache build_almost_bad(int max_n) {
  CatalogCache c;
  const SimpleGraph k4 = from_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto insert = [&c](SimpleGraph h, ConstructionTrace tr) {
    if (!c.keys.insert(canonical_key(h)).second) return;
    c.entries.push_back({std::move(h), std::move(tr)});
  };
  const auto& bad = bad_cache(std::max(8, max_n + 4)).entries;
  for (const CatalogEntry& e : bad) {
    std::vector<NicePath> paths = nice_paths_impl(e.g);
    require_prop(paths.size() == 2,
                 "almost-bad catalog: a bad graph must have exactly two nice "
                 "paths");
    if (e.g.n - 2 <= max_n) {
      for (const NicePath& p : paths) {
        SimpleGraph h = contract_path_impl(e.g, p).g;
        if (h.n == 4 && isomorphic(h, k4)) continue;
        ConstructionTrace tr = e.trace;
        tr.steps.push_back({"contract", {p.p[0], p.p[1], p.p[2], p.p[3]}, {}});
        insert(std::move(h), std::move(tr));
      }
    }
    if (e.g.n - 4 <= max_n) {
      PathContraction first = contract_path_impl(e.g, paths[0]);
      NicePath second;
      for (int i = 0; i < 4; ++i)
        second.p[i] = first.old_to_new[paths[1].p[i]];
      SimpleGraph h = contract_path_impl(first.g, second).g;
      if (!(h.n == 4 && isomorphic(h, k4))) {
        ConstructionTrace tr = e.trace;
        tr.steps.push_back({"contract",
                            {paths[0].p[0], paths[0].p[1], paths[0].p[2],
                             paths[0].p[3]},
                            {}});
        tr.steps.push_back(
            {"contract", {second.p[0], second.p[1], second.p[2], second.p[3]}, {}});
        insert(std::move(h), std::move(tr));
      }
    }
  }
  sort_catalog(c.entries);
  return c;
}

const CatalogCache& almost_bad_cache(int max_n) {
  require_arg(max_n >= 1, "enumerate_almost_bad: max_n must be positive");
  static std::map<int, CatalogCache> store;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(max_n);
  if (it == store.end())
    it = store.emplace(max_n, build_almost_bad(max_n)).first;
  return it->second;
}

}  // namespace

const std::vector<CatalogEntry>& enumerate_almost_bad(int max_n) {
  return almost_bad_cache(max_n).entries;
}

bool is_almost_bad(const SimpleGraph& g, int max_n) {
  require_arg(g.n <= max_n, "is_almost_bad: graph exceeds the catalog cap");
  return almost_bad_cache(max_n).keys.count(canonical_key(g)) != 0;
}

SubgraphCatalog bad_or_almost_bad_catalog(int complete_up_to) {
  require_arg(complete_up_to >= 1,
              "bad_or_almost_bad_catalog: cap must be positive");
  std::vector<CatalogEntry> merged;
  for (const CatalogEntry& e : bad_cache(std::max(8, complete_up_to)).entries)
    if (e.g.n <= complete_up_to) merged.push_back(e);
  for (const CatalogEntry& e : almost_bad_cache(complete_up_to).entries)
    if (e.g.n <= complete_up_to) merged.push_back(e);
  sort_catalog(merged);
  SubgraphCatalog out;
  out.complete_up_to = complete_up_to;
  for (CatalogEntry& e : merged) out.members.push_back(std::move(e.g));
  return out;
}

// ---------------------------------------------------------------------------
// The six forbidden graphs
// ---------------------------------------------------------------------------

namespace {

// Canonical graph6 keys of the six fixtures, produced once by the derivation
// oracles below and re-derived by the regeneration tests.
constexpr const char* kF11Key = "J@OGhHBeF??";
constexpr const char* kF14Key1 = "M?C?HCcQIaP_c_w??";
constexpr const char* kF14Key2 = "M?Ca?CDIQ`POd?w??";
constexpr const char* kF19Key1 = "R@O?????GA_S@PAcA`@H?OoAW?F???";
constexpr const char* kF19Key2 = "R@O?????GA_S@PAcA`@H?OoAg?E_??";
constexpr const char* kF22Key = "U?Ca???????D?T?a?a?PACOG_oAAOCS?AS??w???";

std::vector<SimpleGraph> dedupe_sorted_by_key(std::vector<SimpleGraph> graphs) {
  std::map<std::string, SimpleGraph> by_key;
  for (SimpleGraph& g : graphs) {
    std::string key = canonical_key(g);
    by_key.emplace(std::move(key), std::move(g));
  }
  std::vector<SimpleGraph> out;
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

// Both completions of a bad-style base (four degree-2 vertices inducing a
// matching): two new hubs each adjacent to one vertex of either matching
// edge, plus a shared degree-2 apex joining the hubs.
std::vector<SimpleGraph> hub_completions(const SimpleGraph& base) {
  std::vector<int> d2 = degree2_vertices(base);
  require_prop(d2.size() == 4, "hub completion: base must have four degree-2 "
                               "vertices");
  auto partner = [&base, &d2](int v) {
    for (int w : d2)
      if (w != v && base.has_edge(v, w)) return w;
    throw std::runtime_error("hub completion: degree-2 vertex without a "
                             "matched partner");
  };
  int p = d2[0];
  int p2 = partner(p);
  std::vector<int> others;
  for (int v : d2)
    if (v != p && v != p2) others.push_back(v);
  int q = others[0], q2 = others[1];
  require_prop(partner(q) == q2, "hub completion: matching structure broken");

  std::vector<SimpleGraph> out;
  for (int variant = 0; variant < 2; ++variant) {
    std::array<int, 2> first{{p, variant == 0 ? q : q2}};
    std::array<int, 2> second{{p2, variant == 0 ? q2 : q}};
    require_prop(!base.has_edge(first[0], first[1]) &&
                     !base.has_edge(second[0], second[1]),
                 "hub completion: paired vertices must be non-adjacent");
    SimpleGraph g = disjoint_union(base, isolated_vertices(3));
    int w1 = base.n, w3 = base.n + 1, u = base.n + 2;
    g = add_edge(g, w1, first[0]);
    g = add_edge(g, w1, first[1]);
    g = add_edge(g, w3, second[0]);
    g = add_edge(g, w3, second[1]);
    g = add_edge(g, w1, u);
    g = add_edge(g, w3, u);
    require_prop(is_triangle_free(g) && max_degree_at_most(g, 3),
                 "hub completion: result must stay triangle-free subcubic");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<SimpleGraph> derive_b8_classes(int jobs) {
  GenConstraints c;
  c.max_n = 8;
  c.min_connectivity = 2;
  c.critical_only = true;
  std::vector<SimpleGraph> out;
  generate(
      c,
      [&out](const SimpleGraph& g) {
        if (g.n != 8) return;
        auto dc = degree_counts(g);
        if (dc[0] != 0 || dc[1] != 0 || dc[2] != 4) return;
        SimpleGraph ind = induced_subgraph(g, degree2_vertices(g));
        if (!(ind.m == 2 && max_degree_at_most(ind, 1))) return;
        if (alpha(g).size != 3) return;
        out.push_back(g);
      },
      jobs);
  return dedupe_sorted_by_key(std::move(out));
}

std::vector<SimpleGraph> derive_f11_classes() {
  return dedupe_sorted_by_key(hub_completions(b8()));
}

std::vector<SimpleGraph> derive_f19_classes() {
  return dedupe_sorted_by_key(hub_completions(b16_1()));
}

std::vector<SimpleGraph> derive_f14_classes(int jobs) {
  GenConstraints c;
  c.max_n = 14;
  c.cubic_only = true;
  std::vector<SimpleGraph> out;
  generate(
      c,
      [&out](const SimpleGraph& g) {
        if (g.n == 14 && alpha(g).size == 5) out.push_back(g);
      },
      jobs);
  return dedupe_sorted_by_key(std::move(out));
}

std::vector<SimpleGraph> derive_f22_candidates() {
  SimpleGraph b16 = b16_1();
  require_prop(!cycles_of_length(b16, 6).empty(),
               "f22 derivation: base must have 6-cycles");
  auto all6 = edges_in_all_6cycles(b16);
  require_prop(all6.size() == 1,
               "f22 derivation: expected a unique edge lying in every "
               "6-cycle");
  int w1 = all6[0].first, w2 = all6[0].second;
  SimpleGraph h = delete_edge(b16, w1, w2);

  std::vector<int> d2 = degree2_vertices(b16);
  require_prop(d2.size() == 4, "f22 derivation: base must have four degree-2 "
                               "vertices");
  int x1 = d2[0];
  int x2 = -1;
  for (int v : d2)
    if (v != x1 && b16.has_edge(x1, v)) x2 = v;
  require_prop(x2 != -1, "f22 derivation: matching structure broken");
  std::vector<int> rest;
  for (int v : d2)
    if (v != x1 && v != x2) rest.push_back(v);
  int x3 = rest[0], x4 = rest[1];
  require_prop(b16.has_edge(x3, x4), "f22 derivation: matching structure "
                                     "broken");

  // 5-cycle v1..v5 with a pendant w4 at v4, attached to the opened edge.
  SimpleGraph tail =
      from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {3, 5}});
  SimpleGraph base = disjoint_union(h, tail);
  const int v1 = h.n, v2 = h.n + 1, v3 = h.n + 2, v5 = h.n + 4, w4 = h.n + 5;
  base = add_edge(base, v1, w1);
  base = add_edge(base, v2, w2);

  std::vector<SimpleGraph> out;
  for (int pa : {x1, x2}) {
    for (int pb : {x3, x4}) {
      int r1 = (pa == x1) ? x2 : x1;
      int r2 = (pb == x3) ? x4 : x3;
      for (bool flip : {false, true}) {
        SimpleGraph g = add_edge(base, w4, pa);
        g = add_edge(g, w4, pb);
        g = add_edge(g, v5, flip ? r2 : r1);
        g = add_edge(g, v3, flip ? r1 : r2);
        require_prop(is_cubic(g) && is_triangle_free(g),
                     "f22 derivation: every completion must be cubic and "
                     "triangle-free");
        out.push_back(std::move(g));
      }
    }
  }
  require_prop(out.size() == 8, "f22 derivation: expected eight completions");
  return out;
}

std::vector<SimpleGraph> admissible_gadgets(int jobs) {
  GenConstraints c;
  c.max_n = 11;
  std::vector<SimpleGraph> out;
  generate(
      c,
      [&out](const SimpleGraph& g) {
        if (g.n != 11) return;
        auto dc = degree_counts(g);
        if (dc[2] != 5 || dc[3] != 6) return;
        std::vector<int> d2 = degree2_vertices(g);
        SimpleGraph ind = induced_subgraph(g, d2);
        if (ind.m != 1) return;
        std::vector<int> attachments;
        for (size_t i = 0; i < d2.size(); ++i)
          if (ind.adj[i].empty()) attachments.push_back(d2[i]);
        if (attachments.size() != 3) return;
        if (alpha(g).size != 5) return;
        for (int v : attachments)
          if (!forall_mis_contain(g, v)) return;
        if (alpha(delete_vertices(g, attachments).g).size < 4) return;
        out.push_back(g);
      },
      jobs);
  return dedupe_sorted_by_key(std::move(out));
}

const ForbiddenSix& forbidden_six() {
  static const ForbiddenSix fs = [] {
    auto pinned = [](const char* key, const char* name) {
      require_prop(key[0] != '\0',
                   std::string("forbidden fixture ") + name + " is not pinned");
      return parse_graph6(key);
    };
    ForbiddenSix f;
    f.f11 = pinned(kF11Key, "F11");
    f.f14_1 = pinned(kF14Key1, "F14_1");
    f.f14_2 = pinned(kF14Key2, "F14_2");
    f.f19_1 = pinned(kF19Key1, "F19_1");
    f.f19_2 = pinned(kF19Key2, "F19_2");
    f.f22 = pinned(kF22Key, "F22");

    auto check = [](const SimpleGraph& g, int n3, int n2, long long a,
                    long long lb24, const char* name) {
      std::string who(name);
      require_prop(g.n == n3 + n2, "forbidden fixture " + who + ": wrong order");
      auto dc = degree_counts(g);
      require_prop(dc[0] == 0 && dc[1] == 0 && dc[2] == n2 && dc[3] == n3,
                   "forbidden fixture " + who + ": wrong degree counts");
      require_prop(is_triangle_free(g) && max_degree_at_most(g, 3),
                   "forbidden fixture " + who +
                       ": must be triangle-free subcubic");
      require_prop(at_least_2_connected(g),
                   "forbidden fixture " + who + ": must be 2-connected");
      require_prop(alpha(g).size == a,
                   "forbidden fixture " + who + ": wrong independence number");
      require_prop(lb(g).num == lb24,
                   "forbidden fixture " + who + ": wrong lb");
    };
    check(f.f11, 10, 1, 4, 98, "F11");
    check(f.f14_1, 14, 0, 5, 124, "F14_1");
    check(f.f14_2, 14, 0, 5, 124, "F14_2");
    check(f.f19_1, 18, 1, 7, 170, "F19_1");
    check(f.f19_2, 18, 1, 7, 170, "F19_2");
    check(f.f22, 22, 0, 8, 196, "F22");
    require_prop(canonical_key(f.f14_1) < canonical_key(f.f14_2),
                 "forbidden fixtures: F14 must be ordered by canonical key");
    require_prop(canonical_key(f.f19_1) < canonical_key(f.f19_2),
                 "forbidden fixtures: F19 must be ordered by canonical key");
    return f;
  }();
  return fs;
}

const std::vector<std::pair<std::string, SimpleGraph>>&
forbidden_in_size_order() {
  static const std::vector<std::pair<std::string, SimpleGraph>> order = [] {
    const ForbiddenSix& f = forbidden_six();
    return std::vector<std::pair<std::string, SimpleGraph>>{
        {"F11", f.f11},   {"F14_1", f.f14_1}, {"F14_2", f.f14_2},
        {"F19_1", f.f19_1}, {"F19_2", f.f19_2}, {"F22", f.f22}};
  }();
  return order;
}

// Declared with the isomorphism utilities; defined here because it needs the
// fixtures.
std::optional<std::string> contains_any_forbidden(const SimpleGraph& g) {
  for (const auto& [name, f] : forbidden_in_size_order()) {
    if (f.n > g.n) continue;
    if (find_subgraph(f, g, false).has_value()) return name;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Independence ratio 11/30
// ---------------------------------------------------------------------------

namespace {

int unique_degree2_vertex(const SimpleGraph& g, const char* what) {
  std::vector<int> d2 = degree2_vertices(g);
  require_prop(d2.size() == 1,
               std::string(what) + ": expected exactly one degree-2 vertex");
  return d2[0];
}

const SimpleGraph& g41_fixture() {
  static const SimpleGraph fixture = [] {
    const SimpleGraph base = b8();
    const SimpleGraph f11 = forbidden_six().f11;
    const int u11 = unique_degree2_vertex(f11, "F11");
    std::vector<int> d2 = degree2_vertices(base);
    require_prop(d2.size() == 4, "g41: base must have four degree-2 vertices");

    std::vector<SimpleGraph> variants;
    for (int skip = 3; skip >= 0; --skip) {
      SimpleGraph g = base;
      for (int i = 0; i < 4; ++i) {
        if (i == skip) continue;
        int offset = g.n;
        g = disjoint_union(g, f11);
        g = add_edge(g, d2[i], offset + u11);
      }
      variants.push_back(std::move(g));
    }
    for (size_t i = 1; i < variants.size(); ++i)
      require_prop(isomorphic(variants[0], variants[i]),
                   "g41: all choices of the degree-2 triple must agree up to "
                   "isomorphism");
    SimpleGraph g = std::move(variants.back());  // joins d2[0],d2[1],d2[2]
    require_prop(g.n == 41, "g41: must have 41 vertices");
    require_prop(is_triangle_free(g) && max_degree_at_most(g, 3) &&
                     is_connected(g),
                 "g41: must be a connected triangle-free subcubic graph");
    require_prop(degree2_vertices(g).size() == 1,
                 "g41: must have exactly one degree-2 vertex");
    require_prop(alpha(g).size == 15, "g41: independence number must be 15");
    return g;
  }();
  return fixture;
}

}  // namespace

SimpleGraph g41() { return g41_fixture(); }

SimpleGraph thirty_augment(const SimpleGraph& g,
                           const std::vector<int>& f11_embedding) {
  const SimpleGraph& f11 = forbidden_six().f11;
  require_arg(static_cast<int>(f11_embedding.size()) == f11.n,
              "thirty_augment: embedding must list all 11 images");
  std::vector<bool> in_set(g.n, false);
  for (int v : f11_embedding) {
    require_arg(v >= 0 && v < g.n, "thirty_augment: image out of range");
    require_arg(!in_set[v], "thirty_augment: embedding must be injective");
    in_set[v] = true;
  }
  for (int i = 0; i < f11.n; ++i)
    for (int j = i + 1; j < f11.n; ++j)
      require_arg(g.has_edge(f11_embedding[i], f11_embedding[j]) ==
                      f11.has_edge(i, j),
                  "thirty_augment: embedding is not an induced occurrence");
  const int u11 = unique_degree2_vertex(f11, "F11");
  int outside_neighbor = -1;
  for (int i = 0; i < f11.n; ++i) {
    int img = f11_embedding[i];
    int outside = 0;
    for (int w : g.adj[img])
      if (!in_set[w]) {
        ++outside;
        if (i == u11) outside_neighbor = w;
      }
    if (i == u11)
      require_arg(outside <= 1,
                  "thirty_augment: the degree-2 image may have at most one "
                  "outside neighbor");
    else
      require_arg(outside == 0,
                  "thirty_augment: only the degree-2 image may have outside "
                  "neighbors");
  }

  auto del = delete_vertices(g, f11_embedding);
  const SimpleGraph& big = g41_fixture();
  SimpleGraph r = disjoint_union(del.g, big);
  if (outside_neighbor != -1) {
    int hook = del.g.n + unique_degree2_vertex(big, "G41");
    r = add_edge(r, del.old_to_new[outside_neighbor], hook);
  }
  return r;
}

long long kappa(const SimpleGraph& g) {
  return 30 * alpha(g).size - 11LL * g.n;
}

namespace {

// Induced F11 occurrences whose only link to the rest of the graph (if any)
// leaves from the image of the degree-2 vertex; reported as embeddings.
std::vector<std::vector<int>> replaceable_f11_embeddings(const SimpleGraph& g) {
  const SimpleGraph& f11 = forbidden_six().f11;
  const int u11 = unique_degree2_vertex(f11, "F11");
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& set : all_occurrence_vertex_sets(f11, g, true)) {
    std::vector<bool> in_set(g.n, false);
    for (int v : set) in_set[v] = true;
    std::vector<int> new_to_old;
    SimpleGraph sub = induced_subgraph(g, set, &new_to_old);
    auto emb = find_subgraph(f11, sub, true);
    if (!emb.has_value()) continue;
    std::vector<int> mapped(f11.n);
    for (int i = 0; i < f11.n; ++i) mapped[i] = new_to_old[emb->map[i]];
    bool ok = true;
    for (int i = 0; i < f11.n && ok; ++i) {
      int outside = 0;
      for (int w : g.adj[mapped[i]])
        if (!in_set[w]) ++outside;
      if (i == u11)
        ok = outside <= 1;
      else
        ok = outside == 0;
    }
    if (ok) out.push_back(std::move(mapped));
  }
  return out;
}

CatalogCache build_thirty_closure(const SimpleGraph& root,
                                  const ConstructionTrace& root_trace,
                                  int max_n) {
  CatalogCache c;
  if (root.n <= max_n) {
    c.keys.insert(canonical_key(root));
    c.entries.push_back({root, root_trace});
  }
  for (size_t i = 0; i < c.entries.size(); ++i) {
    SimpleGraph g = c.entries[i].g;
    ConstructionTrace tr = c.entries[i].trace;
    if (g.n + 30 > max_n) continue;
    for (const std::vector<int>& emb : replaceable_f11_embeddings(g)) {
      SimpleGraph h = thirty_augment(g, emb);
      if (!c.keys.insert(canonical_key(h)).second) continue;
      ConstructionTrace t2 = tr;
      t2.steps.push_back({"thirty_augment", emb, {}});
      c.entries.push_back({std::move(h), std::move(t2)});
    }
  }
  sort_catalog(c.entries);
  return c;
}

const CatalogCache& family_T_cache(int max_n) {
  require_arg(max_n >= 1, "family_T: max_n must be positive");
  static std::map<int, CatalogCache> store;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(max_n);
  if (it == store.end()) {
    SimpleGraph root = fl_construction(from_edges(2, {{0, 1}}));
    it = store
             .emplace(max_n,
                      build_thirty_closure(root, {"tree:2:0-1", {}}, max_n))
             .first;
  }
  return it->second;
}

const CatalogCache& family_T_minus_cache(int max_n) {
  require_arg(max_n >= 1, "family_T_minus: max_n must be positive");
  static std::map<int, CatalogCache> store;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(max_n);
  if (it == store.end()) {
    it = store
             .emplace(max_n, build_thirty_closure(forbidden_six().f11,
                                                  {"F11", {}}, max_n))
             .first;
  }
  return it->second;
}

}  // namespace

const std::vector<CatalogEntry>& family_T(int max_n) {
  return family_T_cache(max_n).entries;
}

const std::vector<CatalogEntry>& family_T_minus(int max_n) {
  return family_T_minus_cache(max_n).entries;
}

const char* to_string(Ratio1130 c) {
  switch (c) {
    case Ratio1130::f14:
      return "F14";
    case Ratio1130::f22:
      return "F22";
    case Ratio1130::in_T:
      return "T";
    case Ratio1130::in_T_minus:
      return "Tminus";
    case Ratio1130::general:
      return "general";
  }
  return "general";
}

Ratio1130 classify_11_30(const SimpleGraph& g) {
  require_arg(is_connected(g) && is_triangle_free(g) &&
                  max_degree_at_most(g, 3),
              "classify_11_30: input must be a connected triangle-free "
              "subcubic graph");
  const ForbiddenSix& f = forbidden_six();
  if (isomorphic(g, f.f14_1) || isomorphic(g, f.f14_2)) return Ratio1130::f14;
  if (isomorphic(g, f.f22)) return Ratio1130::f22;
  if (g.n >= 22 && (g.n - 22) % 30 == 0 &&
      family_T_cache(g.n).keys.count(canonical_key(g)) != 0)
    return Ratio1130::in_T;
  if (g.n >= 11 && (g.n - 11) % 30 == 0 &&
      family_T_minus_cache(g.n).keys.count(canonical_key(g)) != 0)
    return Ratio1130::in_T_minus;
  return Ratio1130::general;
}

SimpleGraph fl_construction(const SimpleGraph& tree) {
  require_arg(tree.n >= 2, "fl_construction: tree must have at least 2 nodes");
  require_arg(tree.m == tree.n - 1 && is_connected(tree),
              "fl_construction: input must be a tree");
  for (int v = 0; v < tree.n; ++v)
    require_arg(tree.degree(v) == 1 || tree.degree(v) == 4,
                "fl_construction: internal nodes must have degree exactly 4");

  const SimpleGraph block_internal = b8();
  const SimpleGraph block_leaf = forbidden_six().f11;
  const std::vector<int> att_internal = degree2_vertices(block_internal);
  const std::vector<int> att_leaf = degree2_vertices(block_leaf);

  SimpleGraph g;
  std::vector<int> offset(tree.n, 0);
  int internal_count = 0, leaf_count = 0;
  for (int v = 0; v < tree.n; ++v) {
    offset[v] = g.n;
    if (tree.degree(v) == 4) {
      g = disjoint_union(g, block_internal);
      ++internal_count;
    } else {
      g = disjoint_union(g, block_leaf);
      ++leaf_count;
    }
  }
  for (auto [x, y] : tree.edges()) {
    auto slot = [&tree](int from, int to) {
      int idx = 0;
      for (int w : tree.adj[from]) {
        if (w == to) return idx;
        ++idx;
      }
      throw std::logic_error("fl_construction: edge endpoint mismatch");
    };
    const std::vector<int>& att_x =
        (tree.degree(x) == 4) ? att_internal : att_leaf;
    const std::vector<int>& att_y =
        (tree.degree(y) == 4) ? att_internal : att_leaf;
    g = add_edge(g, offset[x] + att_x[slot(x, y)],
                 offset[y] + att_y[slot(y, x)]);
  }
  require_prop(is_triangle_free(g) && max_degree_at_most(g, 3) &&
                   is_connected(g),
               "fl_construction: result must be connected triangle-free "
               "subcubic");
  long long target = 3LL * internal_count + 4LL * leaf_count;
  require_prop(alpha(g).size == target,
               "fl_construction: independence number must be 3 per internal "
               "node plus 4 per leaf");
  return g;
}

}  // namespace tflab
