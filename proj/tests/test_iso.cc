// Tests for canonical labeling, isomorphism, automorphism orbits, and
// subgraph embedding search.
//
// Orbits and embedding existence are cross-checked against brute-force
// enumeration over all vertex permutations / injective maps, which is
// feasible at the sizes used here and entirely independent of the
// implementations under test.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "test_util.hh"
#include "tflab/graph.hh"
#include "tflab/graph6.hh"
#include "tflab/iso.hh"

using namespace tflab;
using namespace tfixtures;

namespace {

// Brute-force automorphism orbits via all n! permutations (n <= 8).
std::vector<int> brute_orbits(const SimpleGraph& g) {
  std::vector<int> uf(g.n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok)
      for (int v = 0; v < g.n; ++v) {
        int a = find(v), b = find(p[v]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> rep(g.n);
  for (int v = 0; v < g.n; ++v) rep[v] = find(v);
  return rep;
}

// Brute-force check whether H embeds into G (optionally induced): all
// image subsets, all orderings.
bool brute_embeds(const SimpleGraph& h, const SimpleGraph& g, bool induced) {
  if (h.n > g.n) return false;
  std::vector<int> idx(g.n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> sel(h.n);
  std::function<bool(int, int)> choose = [&](int k, int lo) -> bool {
    if (k == h.n) {
      std::vector<int> perm(sel);
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (int a = 0; a < h.n && ok; ++a)
          for (int b = a + 1; b < h.n && ok; ++b) {
            bool he = h.has_edge(a, b), ge = g.has_edge(perm[a], perm[b]);
            if (he && !ge) ok = false;
            if (induced && !he && ge) ok = false;
          }
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int i = lo; i < g.n; ++i) {
      sel[k] = i;
      if (choose(k + 1, i + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(31337);
  std::vector<SimpleGraph> fixtures = {cycle(5),   path(5),      petersen(),
                                       heawood(),  b8_like(),    complete(4),
                                       star(3),    cycle(6)};
  SimpleGraph r1 = random_graph(rng, 10, 0.3);
  SimpleGraph r2 = random_subcubic(rng, 12, 15);
  fixtures.push_back(r1);
  fixtures.push_back(r2);
  for (const auto& g : fixtures) {
    std::string key = canonical_key(g);
    // The key itself parses back to an isomorphic graph.
    SimpleGraph canon = parse_graph6(key);
    CHECK(canon.n == g.n);
    CHECK(canon.m == g.m);
    for (int t = 0; t < 1000; ++t) {
      auto p = random_permutation(rng, g.n);
      CHECK(canonical_key(permuted(g, p)) == key);
    }
  }
}

TEST_CASE("distinct graphs get distinct keys") {
  CHECK(canonical_key(cycle(5)) != canonical_key(path(5)));
  CHECK(canonical_key(cycle(6)) !=
        canonical_key(disjoint_union(cycle(3), cycle(3))));
  // Same degree sequence, different graphs: C4+K1 vs. paw-free alternative.
  SimpleGraph a = disjoint_union(cycle(4), from_edges(1, {}));
  SimpleGraph b = path(5);
  CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("isomorphic() recognizes relabelings and rejects non-isomorphic pairs") {
  std::mt19937 rng(55);
  for (int t = 0; t < 200; ++t) {
    SimpleGraph g = random_graph(rng, 8, 0.4);
    auto p = random_permutation(rng, g.n);
    CHECK(isomorphic(g, permuted(g, p)));
  }
  CHECK(!isomorphic(cycle(5), path(5)));
  CHECK(!isomorphic(petersen(), heawood()));
  CHECK(isomorphic(from_edges(0, {}), from_edges(0, {})));
}

TEST_CASE("orbits match brute force on fixtures") {
  auto orb = [](const SimpleGraph& g) { return canonicalize(g).orbit; };
  // P4: ends {0,3} and middles {1,2}.
  CHECK(orb(path(4)) == std::vector<int>{0, 1, 1, 0});
  // Star: center fixed, leaves one orbit.
  CHECK(orb(star(3)) == std::vector<int>{0, 1, 1, 1});
  // Vertex-transitive graphs: single orbit.
  CHECK(orb(cycle(5)) == std::vector<int>(5, 0));
  CHECK(orb(petersen()) == std::vector<int>(10, 0));
  CHECK(orb(heawood()) == std::vector<int>(14, 0));
  CHECK(orb(complete(4)) == std::vector<int>(4, 0));
}

TEST_CASE("orbits match brute force on random graphs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + (int)(rng() % 6);  // up to 7 vertices: 5040 permutations
    SimpleGraph g = random_graph(rng, n, 0.2 + 0.5 * (t % 3) / 2.0);
    CHECK(canonicalize(g).orbit == brute_orbits(g));
  }
  CHECK(canonicalize(b8_like()).orbit == brute_orbits(b8_like()));
}

TEST_CASE("colored canonicalization distinguishes colorings and respects them") {
  SimpleGraph p3 = path(3);
  std::vector<int> end_marked = {1, 0, 0};
  std::vector<int> mid_marked = {0, 1, 0};
  std::vector<int> other_end = {0, 0, 1};
  CHECK(canonicalize(p3, &end_marked).key != canonicalize(p3, &mid_marked).key);
  CHECK(canonicalize(p3, &end_marked).key == canonicalize(p3, &other_end).key);
  // Uncolored key and colored key differ (suffix), but graphs agree.
  CHECK(canonicalize(p3, &end_marked).key != canonicalize(p3).key);

  // Permuting graph and colors together preserves the colored key.
  std::mt19937 rng(7);
  SimpleGraph g = random_graph(rng, 9, 0.35);
  std::vector<int> colors(9);
  for (auto& c : colors) c = (int)(rng() % 3);
  std::string key = canonicalize(g, &colors).key;
  for (int t = 0; t < 300; ++t) {
    auto p = random_permutation(rng, g.n);
    std::vector<int> pc(9);
    for (int v = 0; v < 9; ++v) pc[p[v]] = colors[v];
    SimpleGraph pg = permuted(g, p);
    CHECK(canonicalize(pg, &pc).key == key);
  }

  // Colored orbits: marking one endpoint of P3 breaks the end-swap symmetry.
  auto r = canonicalize(p3, &end_marked);
  CHECK(r.orbit == std::vector<int>{0, 1, 2});
  std::vector<int> same = {0, 0, 0};
  CHECK(canonicalize(p3, &same).orbit == std::vector<int>{0, 1, 0});
}

TEST_CASE("canonicalize rejects oversized input") {
  CHECK_THROWS(canonicalize(cycle(70)));
  CHECK_NOTHROW(canonicalize(cycle(70), nullptr, 128));
}

TEST_CASE("find_subgraph on reference cases") {
  // 5-cycles sit in the Petersen graph, induced even.
  CHECK(find_subgraph(cycle(5), petersen(), false).has_value());
  CHECK(find_subgraph(cycle(5), petersen(), true).has_value());
  // No triangle or 4-cycle in a girth-5 graph.
  CHECK(!find_subgraph(complete(3), petersen(), false).has_value());
  CHECK(!find_subgraph(cycle(4), petersen(), false).has_value());
  // P3 in K3: as a subgraph yes, induced no.
  CHECK(find_subgraph(path(3), complete(3), false).has_value());
  CHECK(!find_subgraph(path(3), complete(3), true).has_value());
  // K1 embeds anywhere nonempty.
  CHECK(find_subgraph(from_edges(1, {}), cycle(4), false).has_value());
  // Too large never embeds.
  CHECK(!find_subgraph(cycle(6), cycle(5), false).has_value());
}

TEST_CASE("returned embeddings replay correctly") {
  std::mt19937 rng(1234);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    SimpleGraph h = random_graph(rng, 2 + (int)(rng() % 4), 0.5);
    SimpleGraph g = random_graph(rng, 6 + (int)(rng() % 3), 0.5);
    for (bool induced : {false, true}) {
      auto e = find_subgraph(h, g, induced);
      if (!e) continue;
      ++found;
      std::set<int> used;
      for (int v : e->map) used.insert(v);
      CHECK((int)used.size() == h.n);  // injective
      for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b) {
          if (h.has_edge(a, b)) CHECK(g.has_edge(e->map[a], e->map[b]));
          if (induced && !h.has_edge(a, b))
            CHECK(!g.has_edge(e->map[a], e->map[b]));
        }
    }
  }
  CHECK(found > 100);  // the sampling actually exercised the checker
}

TEST_CASE("embedding existence agrees with brute force") {
  std::mt19937 rng(4321);
  for (int t = 0; t < 300; ++t) {
    int hn = 2 + (int)(rng() % 5);  // up to 6
    int gn = hn + (int)(rng() % (10 - hn));  // up to 9
    SimpleGraph h = random_graph(rng, hn, 0.45);
    SimpleGraph g = random_graph(rng, gn, 0.45);
    bool induced = t % 2 == 0;
    CHECK(find_subgraph(h, g, induced).has_value() ==
          brute_embeds(h, g, induced));
  }
}

TEST_CASE("occurrence vertex sets are counted without automorphic duplicates") {
  CHECK(all_occurrence_vertex_sets(complete(3), complete(4), false).size() == 4);
  CHECK(all_occurrence_vertex_sets(complete(2), complete(4), false).size() == 6);
  CHECK(all_occurrence_vertex_sets(path(3), path(4), false).size() == 2);
  // Each 5-cycle of the Petersen graph gives exactly one vertex set.
  auto sets = all_occurrence_vertex_sets(cycle(5), petersen(), false);
  CHECK(sets.size() == cycles_of_length(petersen(), 5).size());
  // Removing any one vertex of C5 leaves an induced P4: five sets.
  CHECK(all_occurrence_vertex_sets(path(4), cycle(5), true).size() == 5);
  // Sets really are sorted and unique.
  for (const auto& s : sets) CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::set<std::vector<int>>(sets.begin(), sets.end()).size() ==
        sets.size());
}
