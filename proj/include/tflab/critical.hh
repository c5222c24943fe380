// Criticality tests and the structural toolkit built on them: independence
// packings, double subdivision, and two-cutset gluing/decomposition.
#pragma once

#include <utility>
#include <vector>

#include "tflab/graph.hh"

namespace tflab {

// An edge is critical when deleting it raises the independence number.
bool is_edge_critical(const SimpleGraph& g, int u, int v);

// A graph is critical when every edge is critical; K1 (and any edgeless
// graph) is critical vacuously.
bool is_critical(const SimpleGraph& g);

// Vertex-disjoint connected critical subgraphs covering V(G) whose
// independence numbers sum to alpha(G).
struct IndependencePacking {
  std::vector<std::vector<int>> part_vertices;  // original vertex ids
  std::vector<SimpleGraph> parts;
  std::vector<long long> alphas;
};

// Deletes non-critical edges (lowest edge first) until the remainder is
// critical, then returns its components.  The sum certificate
// sum(alphas) == alpha(G) is asserted, never assumed.
IndependencePacking independence_packing(const SimpleGraph& g);

// Replaces the edge ad by a path a-b-c-d through two fresh vertices
// (ids n and n+1).  Asserts alpha(new) == alpha(G)+1; when
// `assert_criticality_preserved` is set, additionally asserts
// is_critical(new) == is_critical(G).
SimpleGraph double_subdivide(const SimpleGraph& g, int a, int d,
                             bool assert_criticality_preserved = false);

// Glues G1 onto the edge xy of G0: removes xy, removes v from G1, and joins
// every former neighbor of v to x or y as directed by `targets` (parallel to
// the sorted neighbor list of v; 0 -> x, 1 -> y; both values must occur).
// Preconditions: G0 and G1 connected critical, neither K1 nor K2.
// G0 keeps its vertex ids; G1's survivors follow.  Asserts the result is
// critical with alpha(G0) + alpha(G1).
SimpleGraph glue(const SimpleGraph& g0, int x, int y, const SimpleGraph& g1,
                 int v, const std::vector<int>& targets);

// Inverse of glue on a non-adjacent 2-cutset {x,y} of a connected critical
// graph: the side containing a common neighbor of x and y (when one exists)
// becomes G0 = G[C0 + {x,y}] + xy; the other becomes G1 = G[C1 + {x,y}]
// with x,y identified.  When neither side has a common neighbor, the side
// with the smallest vertex id is tried first and the orientation is flipped
// if its certificates fail.  Asserts both parts critical and
// alpha-additivity.
std::pair<SimpleGraph, SimpleGraph> decompose_on_2cutset(const SimpleGraph& g,
                                                         int x, int y);

}  // namespace tflab
