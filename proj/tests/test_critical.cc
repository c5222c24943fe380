// Tests for criticality, independence packings, double subdivision, and
// two-cutset glue/decompose.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hh"
#include "tflab/alpha.hh"
#include "tflab/critical.hh"
#include "tflab/graph.hh"
#include "tflab/iso.hh"

using namespace tflab;
using namespace tfixtures;

TEST_CASE("edge criticality basics") {
  SimpleGraph c5 = cycle(5);
  for (auto [u, v] : c5.edges()) CHECK(is_edge_critical(c5, u, v));
  SimpleGraph p3 = path(3);
  CHECK(!is_edge_critical(p3, 0, 1));
  CHECK(!is_edge_critical(p3, 1, 2));
  CHECK(is_edge_critical(path(2), 0, 1));
  CHECK_THROWS(is_edge_critical(c5, 0, 2));  // not an edge
}

TEST_CASE("graph criticality") {
  CHECK(is_critical(from_edges(1, {})));   // K1
  CHECK(is_critical(from_edges(4, {})));   // edgeless, vacuously
  CHECK(is_critical(cycle(5)));
  CHECK(is_critical(cycle(7)));
  CHECK(!is_critical(cycle(4)));
  CHECK(!is_critical(cycle(6)));
  CHECK(!is_critical(path(4)));
  CHECK(is_critical(complete(3)));
  CHECK(is_critical(complete(4)));
  CHECK(is_critical(path(2)));
  CHECK(is_critical(b8_like()));
  CHECK(!is_critical(petersen()));
  // Disjoint unions of critical graphs are critical.
  CHECK(is_critical(disjoint_union(cycle(5), complete(3))));
}

TEST_CASE("independence packing reference cases") {
  // A connected critical graph packs as itself.
  for (const SimpleGraph& g : {cycle(5), cycle(7), complete(3), b8_like()}) {
    IndependencePacking p = independence_packing(g);
    REQUIRE(p.parts.size() == 1);
    CHECK(p.parts[0] == g);
    CHECK(p.alphas[0] == alpha(g).size);
  }
  // P4: middle edge goes, leaving two K2s.
  IndependencePacking p4 = independence_packing(path(4));
  REQUIRE(p4.parts.size() == 2);
  CHECK(p4.part_vertices[0] == std::vector<int>{0, 1});
  CHECK(p4.part_vertices[1] == std::vector<int>{2, 3});
  CHECK(p4.alphas == std::vector<long long>{1, 1});
  // Components that are already critical stay intact.
  IndependencePacking pu = independence_packing(disjoint_union(cycle(5), path(2)));
  REQUIRE(pu.parts.size() == 2);
  CHECK(pu.alphas == std::vector<long long>{2, 1});
}

TEST_CASE("independence packing certificates on random graphs") {
  std::mt19937 rng(4001);
  for (int t = 0; t < 120; ++t) {
    int n = 1 + (int)(rng() % 10);
    SimpleGraph g = random_graph(rng, n, 0.3);
    IndependencePacking p = independence_packing(g);
    // Parts cover V(G), are vertex-disjoint, connected, and critical.
    std::set<int> seen;
    long long total = 0;
    for (size_t i = 0; i < p.parts.size(); ++i) {
      CHECK(is_connected(p.parts[i]));
      CHECK(is_critical(p.parts[i]));
      CHECK(alpha(p.parts[i]).size == p.alphas[i]);
      total += p.alphas[i];
      for (int v : p.part_vertices[i]) {
        CHECK(!seen.count(v));
        seen.insert(v);
      }
      // Each part is an induced-subgraph-of-the-residue; at minimum its
      // edges must exist in g.
      for (auto [a, b] : p.parts[i].edges())
        CHECK(g.has_edge(p.part_vertices[i][a], p.part_vertices[i][b]));
    }
    CHECK((int)seen.size() == g.n);
    CHECK(total == alpha(g).size);
  }
}

TEST_CASE("double subdivision grows alpha by one and keeps criticality") {
  SimpleGraph c7 = double_subdivide(cycle(5), 0, 1, true);
  CHECK(c7.n == 7);
  CHECK(isomorphic(c7, cycle(7)));
  CHECK(alpha(c7).size == 3);

  // Degenerate boundary: subdividing the lone edge of K2 yields P4.  Alpha
  // still grows by one, but criticality is NOT preserved here (K2 is critical,
  // P4's middle edge is not critical), so the equivalence check must stay off.
  // The equivalence is only meaningful when the edge's component has >= 3
  // vertices; see the random-graph law test below.
  SimpleGraph p4 = double_subdivide(path(2), 0, 1, false);
  CHECK(isomorphic(p4, path(4)));
  CHECK(alpha(p4).size == 2);
  CHECK(is_critical(path(2)));
  CHECK(!is_critical(p4));
  CHECK_THROWS(double_subdivide(path(2), 0, 1, true));

  // The seed 8-vertex graph: subdividing its 4-cycle edge between two
  // degree-3 vertices gives a 10-vertex critical graph.
  SimpleGraph b8 = b8_like();
  REQUIRE(b8.has_edge(2, 4));
  SimpleGraph b10 = double_subdivide(b8, 2, 4, true);
  CHECK(b10.n == 10);
  CHECK(is_critical(b10));
  CHECK(alpha(b10).size == 4);

  CHECK_THROWS(double_subdivide(cycle(5), 0, 2, false));  // not an edge
}

TEST_CASE("double subdivision laws hold on random graphs") {
  std::mt19937 rng(4002);
  int tested = 0;
  while (tested < 200) {
    int n = 2 + (int)(rng() % 8);
    SimpleGraph g = random_graph(rng, n, 0.35);
    if (g.m == 0) continue;
    auto es = g.edges();
    auto [a, d] = es[rng() % es.size()];
    ++tested;
    // The criticality equivalence only holds when the edge's component is not
    // K2 (K2 -> P4 is the lone counterexample shape), so request it exactly
    // when that component has >= 3 vertices.  Alpha growth is always asserted.
    bool edge_in_k2 = false;
    for (const auto& comp : components(g)) {
      if (std::find(comp.begin(), comp.end(), a) != comp.end()) {
        edge_in_k2 = (comp.size() == 2);
        break;
      }
    }
    SimpleGraph h = double_subdivide(g, a, d, !edge_in_k2);
    CHECK(h.n == g.n + 2);
    CHECK(h.m == g.m + 2);
  }
}

TEST_CASE("glue: reference example and precondition rejections") {
  // C5 glued onto C5 with the balanced assignment gives C9 (9 vertices,
  // critical, alpha 4).
  SimpleGraph c5 = cycle(5);
  SimpleGraph g = glue(c5, 0, 1, c5, 0, {0, 1});
  CHECK(g.n == 9);
  CHECK(alpha(g).size == 4);
  CHECK(is_critical(g));
  CHECK(isomorphic(g, cycle(9)));

  // Assignment must use both endpoints.
  CHECK_THROWS(glue(c5, 0, 1, c5, 0, {0, 0}));
  CHECK_THROWS(glue(c5, 0, 1, c5, 0, {1, 1}));
  // K1/K2 and non-critical inputs are rejected.
  CHECK_THROWS(glue(c5, 0, 1, path(2), 0, {0, 1}));
  CHECK_THROWS(glue(path(2), 0, 1, c5, 0, {0, 1}));
  CHECK_THROWS(glue(c5, 0, 1, cycle(4), 0, {0, 1}));
  CHECK_THROWS(glue(cycle(6), 0, 1, c5, 0, {0, 1}));
  // xy must be an edge; assignment must match the neighbor count.
  CHECK_THROWS(glue(c5, 0, 2, c5, 0, {0, 1}));
  CHECK_THROWS(glue(c5, 0, 1, c5, 0, {0, 1, 1}));
}

TEST_CASE("decompose: C5 splits into two triangles") {
  auto [g0, g1] = decompose_on_2cutset(cycle(5), 0, 2);
  CHECK(isomorphic(g0, complete(3)));
  CHECK(isomorphic(g1, complete(3)));
}

TEST_CASE("decompose rejects bad inputs") {
  CHECK_THROWS(decompose_on_2cutset(cycle(5), 0, 1));  // adjacent pair
  CHECK_THROWS(decompose_on_2cutset(cycle(4), 0, 2));  // not critical
  CHECK_THROWS(decompose_on_2cutset(disjoint_union(cycle(5), cycle(5)), 0, 2));
  CHECK_THROWS(decompose_on_2cutset(complete(4), 0, 1));  // no cutset at all
}

namespace {

// All non-adjacent 2-cutsets of g.
std::vector<std::pair<int, int>> nonadjacent_2cutsets(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      if (g.has_edge(x, y)) continue;
      if (components(delete_vertices(g, {x, y}).g).size() >= 2)
        out.push_back({x, y});
    }
  return out;
}

}  // namespace

TEST_CASE("glue then decompose round-trips to the inputs up to isomorphism") {
  std::mt19937 rng(4003);
  std::vector<SimpleGraph> pool = {cycle(5), cycle(7), cycle(9), complete(3),
                                   b8_like()};
  int done = 0;
  while (done < 50) {
    const SimpleGraph& g0 = pool[rng() % pool.size()];
    const SimpleGraph& g1 = pool[rng() % pool.size()];
    auto es = g0.edges();
    auto [x, y] = es[rng() % es.size()];
    int v = (int)(rng() % g1.n);
    size_t deg = g1.adj[v].size();
    std::vector<int> targets(deg);
    for (auto& t : targets) t = (int)(rng() % 2);
    bool sx = false, sy = false;
    for (int t : targets) (t == 0 ? sx : sy) = true;
    if (!sx || !sy) continue;
    ++done;

    SimpleGraph glued = glue(g0, x, y, g1, v, targets);
    // The construction's seam is a non-adjacent 2-cutset of the result.
    auto [d0, d1] = decompose_on_2cutset(glued, x, y);
    std::multiset<std::string> got = {canonical_key(d0), canonical_key(d1)};
    std::multiset<std::string> want = {canonical_key(g0), canonical_key(g1)};
    CHECK(got == want);
  }
}

TEST_CASE("decompose works on every non-adjacent 2-cutset of handcrafted criticals") {
  for (const SimpleGraph& g : {cycle(5), cycle(7), cycle(9), b8_like()}) {
    for (auto [x, y] : nonadjacent_2cutsets(g)) {
      auto [g0, g1] = decompose_on_2cutset(g, x, y);
      CHECK(is_critical(g0));
      CHECK(is_critical(g1));
      CHECK(alpha(g0).size + alpha(g1).size == alpha(g).size);
    }
  }
}

TEST_CASE("no degree-2 vertex of a handcrafted critical graph lies on a 4-cycle") {
  for (const SimpleGraph& g : {cycle(5), cycle(7), b8_like()}) {
    auto quads = cycles_of_length(g, 4);
    for (const auto& c : quads)
      for (int v : c) CHECK(g.degree(v) != 2);
  }
}
