#include "tflab/critical.hh"

#include <algorithm>
#include <stdexcept>

#include "tflab/alpha.hh"

namespace tflab {

bool is_edge_critical(const SimpleGraph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::runtime_error("is_edge_critical: not an edge");
  return alpha(delete_edge(g, u, v)).size > alpha(g).size;
}

bool is_critical(const SimpleGraph& g) {
  long long base = alpha(g).size;
  for (auto [u, v] : g.edges())
    if (alpha(delete_edge(g, u, v)).size <= base) return false;
  return true;
}

IndependencePacking independence_packing(const SimpleGraph& g) {
  SimpleGraph h = g;
  long long base = alpha(h).size;
  for (;;) {
    bool removed = false;
    for (auto [u, v] : h.edges()) {  // lowest edge first
      if (alpha(delete_edge(h, u, v)).size == base) {
        h = delete_edge(h, u, v);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  IndependencePacking p;
  long long total = 0;
  for (auto& comp : components(h)) {
    SimpleGraph part = induced_subgraph(h, comp, nullptr);
    long long a = alpha(part).size;
    total += a;
    p.part_vertices.push_back(comp);
    p.parts.push_back(std::move(part));
    p.alphas.push_back(a);
  }
  if (total != base)
    throw std::logic_error("independence_packing: certificate failed");
  return p;
}

SimpleGraph double_subdivide(const SimpleGraph& g, int a, int d,
                             bool assert_criticality_preserved) {
  if (!g.has_edge(a, d))
    throw std::runtime_error("double_subdivide: not an edge");
  int b = g.n, c = g.n + 1;
  auto es = g.edges();
  es.erase(std::remove(es.begin(), es.end(),
                       std::make_pair(std::min(a, d), std::max(a, d))),
           es.end());
  es.push_back({a, b});
  es.push_back({b, c});
  es.push_back({c, d});
  SimpleGraph h = from_edges(g.n + 2, es);
  if (alpha(h).size != alpha(g).size + 1)
    throw std::logic_error("double_subdivide: alpha did not grow by one");
  if (assert_criticality_preserved && is_critical(h) != is_critical(g))
    throw std::logic_error("double_subdivide: criticality not preserved");
  return h;
}

SimpleGraph glue(const SimpleGraph& g0, int x, int y, const SimpleGraph& g1,
                 int v, const std::vector<int>& targets) {
  if (!g0.has_edge(x, y)) throw std::runtime_error("glue: xy not an edge");
  if (v < 0 || v >= g1.n) throw std::runtime_error("glue: bad vertex v");
  if (g0.n < 3 || g1.n < 3)
    throw std::runtime_error("glue: inputs must not be K1 or K2");
  if (!is_connected(g0) || !is_connected(g1))
    throw std::runtime_error("glue: inputs must be connected");
  if (!is_critical(g0) || !is_critical(g1))
    throw std::runtime_error("glue: inputs must be critical");
  const auto& nb = g1.adj[v];
  if (targets.size() != nb.size())
    throw std::runtime_error("glue: assignment size mismatch");
  bool sawx = false, sawy = false;
  for (int t : targets) {
    if (t == 0) sawx = true;
    else if (t == 1) sawy = true;
    else throw std::runtime_error("glue: assignment entries must be 0 or 1");
  }
  if (!sawx || !sawy)
    throw std::runtime_error("glue: both x and y must be used");

  VertexDeletion d1 = delete_vertices(g1, {v});
  auto es = delete_edge(g0, x, y).edges();
  for (auto [a, b] : d1.g.edges()) es.push_back({g0.n + a, g0.n + b});
  for (size_t i = 0; i < nb.size(); ++i) {
    int endpoint = targets[i] == 0 ? x : y;
    es.push_back({endpoint, g0.n + d1.old_to_new[nb[i]]});
  }
  SimpleGraph g = from_edges(g0.n + d1.g.n, es);
  if (!is_critical(g)) throw std::logic_error("glue: result not critical");
  if (alpha(g).size != alpha(g0).size + alpha(g1).size)
    throw std::logic_error("glue: alpha not additive");
  return g;
}

namespace {

// Builds the (G0, G1) pair for a fixed orientation; throws logic_error when
// the certificates fail.
std::pair<SimpleGraph, SimpleGraph> decompose_oriented(
    const SimpleGraph& g, int x, int y, const std::vector<int>& c0,
    const std::vector<int>& c1, long long alpha_g) {
  // Every C1 vertex must see at most one of {x,y}.
  for (int w : c1)
    if (g.has_edge(w, x) && g.has_edge(w, y))
      throw std::logic_error("decompose: C1 vertex adjacent to both x and y");

  std::vector<int> side0(c0);
  side0.push_back(x);
  side0.push_back(y);
  std::sort(side0.begin(), side0.end());
  std::vector<int> back0;
  SimpleGraph ind0 = induced_subgraph(g, side0, &back0);
  int x0 = -1, y0 = -1;
  for (int i = 0; i < ind0.n; ++i) {
    if (back0[i] == x) x0 = i;
    if (back0[i] == y) y0 = i;
  }
  SimpleGraph g0 = add_edge(ind0, x0, y0);

  // G1: C1 plus a fresh vertex standing for the identified pair {x,y}.
  std::vector<int> sorted_c1(c1);
  std::sort(sorted_c1.begin(), sorted_c1.end());
  std::vector<int> idx(g.n, -1);
  for (int i = 0; i < (int)sorted_c1.size(); ++i) idx[sorted_c1[i]] = i;
  int vid = (int)sorted_c1.size();
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges()) {
    bool a1 = idx[a] >= 0, b1 = idx[b] >= 0;
    if (a1 && b1) es.push_back({idx[a], idx[b]});
  }
  for (int w : sorted_c1)
    if (g.has_edge(w, x) || g.has_edge(w, y)) es.push_back({idx[w], vid});
  SimpleGraph g1 = from_edges(vid + 1, es);

  if (!is_critical(g0)) throw std::logic_error("decompose: G0 not critical");
  if (!is_critical(g1)) throw std::logic_error("decompose: G1 not critical");
  if (alpha(g0).size + alpha(g1).size != alpha_g)
    throw std::logic_error("decompose: alpha not additive");
  return {g0, g1};
}

}  // namespace

std::pair<SimpleGraph, SimpleGraph> decompose_on_2cutset(const SimpleGraph& g,
                                                         int x, int y) {
  if (x < 0 || y < 0 || x >= g.n || y >= g.n || x == y)
    throw std::runtime_error("decompose: bad cutset pair");
  if (!is_connected(g)) throw std::runtime_error("decompose: not connected");
  if (g.has_edge(x, y))
    throw std::runtime_error(
        "decompose: cutset pair adjacent (clique cutsets cannot occur in "
        "critical graphs)");
  if (!is_critical(g)) throw std::runtime_error("decompose: not critical");
  VertexDeletion d = delete_vertices(g, {x, y});
  auto comps = components(d.g);
  if (comps.size() < 2) throw std::runtime_error("decompose: not a 2-cutset");
  if (comps.size() > 2)
    throw std::runtime_error("decompose: more than two components");
  std::vector<std::vector<int>> sides(2);
  for (int s = 0; s < 2; ++s)
    for (int w : comps[s]) sides[s].push_back(d.new_to_old[w]);

  auto has_common = [&](const std::vector<int>& side) {
    for (int w : side)
      if (g.has_edge(w, x) && g.has_edge(w, y)) return true;
    return false;
  };
  bool c0_common = has_common(sides[0]), c1_common = has_common(sides[1]);
  long long alpha_g = alpha(g).size;
  if (c0_common && c1_common)
    throw std::runtime_error(
        "decompose: both sides have a vertex adjacent to both x and y");
  if (c0_common)
    return decompose_oriented(g, x, y, sides[0], sides[1], alpha_g);
  if (c1_common)
    return decompose_oriented(g, x, y, sides[1], sides[0], alpha_g);
  // No common neighbor on either side: try smallest-id side as C0 first,
  // flip if its certificates fail.
  int s0 = std::min(sides[0][0], sides[1][0]) == sides[0][0] ? 0 : 1;
  try {
    return decompose_oriented(g, x, y, sides[s0], sides[1 - s0], alpha_g);
  } catch (const std::logic_error&) {
    return decompose_oriented(g, x, y, sides[1 - s0], sides[s0], alpha_g);
  }
}

}  // namespace tflab
