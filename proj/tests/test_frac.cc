// Tests for the exact fractional chromatic number.
//
// The column-generation solver and the full-enumeration LP are compared on
// everything small; known closed-form values (odd cycles, bipartite graphs,
// cliques, the Petersen graph) are frozen as literals.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hh"
#include "tflab/alpha.hh"
#include "tflab/frac.hh"
#include "tflab/graph.hh"

using namespace tflab;
using namespace tfixtures;

TEST_CASE("known closed-form values") {
  // Odd cycles C_{2k+1}: 2 + 1/k.
  CHECK(fractional_chromatic(cycle(5)) == Rational(5, 2));
  CHECK(fractional_chromatic(cycle(7)) == Rational(7, 3));
  CHECK(fractional_chromatic(cycle(9)) == Rational(9, 4));
  CHECK(fractional_chromatic(cycle(11)) == Rational(11, 5));
  // Bipartite graphs with an edge: exactly 2.
  CHECK(fractional_chromatic(path(6)) == 2);
  CHECK(fractional_chromatic(cycle(6)) == 2);
  CHECK(fractional_chromatic(heawood()) == 2);
  CHECK(fractional_chromatic(star(4)) == 2);
  // Cliques: n.
  CHECK(fractional_chromatic(complete(3)) == 3);
  CHECK(fractional_chromatic(complete(4)) == 4);
  CHECK(fractional_chromatic(complete(6)) == 6);
  // Edgeless: 1; empty graph: 0; single vertex: 1.
  CHECK(fractional_chromatic(from_edges(5, {})) == 1);
  CHECK(fractional_chromatic(from_edges(1, {})) == 1);
  CHECK(fractional_chromatic(from_edges(0, {})) == 0);
  // Petersen graph: n / alpha = 10/4 is attained (vertex-transitive).
  CHECK(fractional_chromatic(petersen()) == Rational(5, 2));
}

TEST_CASE("column generation agrees with the full-enumeration LP") {
  std::vector<SimpleGraph> fixtures = {cycle(5), cycle(7),  path(6),
                                       complete(4), star(3), b8_like(),
                                       petersen(),  cycle(9)};
  for (const auto& g : fixtures)
    CHECK(fractional_chromatic(g) == fractional_chromatic_bruteforce(g));

  std::mt19937 rng(2718);
  for (int t = 0; t < 120; ++t) {
    int n = 1 + (int)(rng() % 9);
    SimpleGraph g = random_graph(rng, n, 0.15 + 0.55 * (t % 4) / 3.0);
    CHECK(fractional_chromatic(g) == fractional_chromatic_bruteforce(g));
  }
}

TEST_CASE("sandwich bounds n/alpha <= chi_f <= n") {
  std::mt19937 rng(2719);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + (int)(rng() % 10);
    SimpleGraph g = random_graph(rng, n, 0.4);
    Rational cf = fractional_chromatic(g);
    CHECK(cf >= Rational(g.n, alpha(g).size));
    CHECK(cf <= g.n);
  }
}

TEST_CASE("removing an edge never raises chi_f") {
  std::mt19937 rng(2720);
  for (int t = 0; t < 25; ++t) {
    SimpleGraph g = random_graph(rng, 8, 0.35);
    Rational cf = fractional_chromatic(g);
    for (auto [u, v] : g.edges())
      CHECK(fractional_chromatic(delete_edge(g, u, v)) <= cf);
  }
}

TEST_CASE("disjoint union takes the max") {
  std::mt19937 rng(2721);
  for (int t = 0; t < 25; ++t) {
    SimpleGraph a = random_graph(rng, 5, 0.5);
    SimpleGraph b = random_graph(rng, 5, 0.5);
    Rational ca = fractional_chromatic(a);
    Rational cb = fractional_chromatic(b);
    CHECK(fractional_chromatic(disjoint_union(a, b)) == std::max(ca, cb));
  }
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS(fractional_chromatic(cycle(21)));
  CHECK_NOTHROW(fractional_chromatic(cycle(21), 32));
  CHECK_THROWS(fractional_chromatic_bruteforce(cycle(11)));
}

TEST_CASE("a triangle-free subcubic sample stays within the conjectured 8/3") {
  // Exploratory bound from the conclusion of the line of work this
  // laboratory verifies; on these fixtures it holds exactly.
  CHECK(fractional_chromatic(b8_like()) <= Rational(8, 3));
  CHECK(fractional_chromatic(petersen()) <= Rational(8, 3));
  std::mt19937 rng(2722);
  int done = 0;
  while (done < 40) {
    SimpleGraph g = random_subcubic(rng, 11, 14);
    if (!is_triangle_free(g)) continue;
    ++done;
    CHECK(fractional_chromatic(g) <= Rational(8, 3));
  }
}
