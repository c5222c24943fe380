// Exact optimization core: maximum (weighted) independent sets, avoidance
// queries, triangle packing and bad-subgraph packing, and the triangle-aware
// lower-bound arithmetic.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <vector>

#include "tflab/graph.hh"
#include "tflab/rational24.hh"

namespace tflab {

using Rational = boost::multiprecision::mpq_rational;

struct MisResult {
  long long size;
  std::vector<int> witness;  // one maximum independent set (sorted)
};

// Exact maximum independent set by branch-and-bound on a max-degree vertex
// with degree-0/1 removal and degree-2 folding.  Works on any simple graph;
// the reductions merely shine on subcubic ones.
MisResult alpha(const SimpleGraph& g);

struct WeightedMisResult {
  Rational weight;
  std::vector<int> witness;  // maximizer; vertices of nonpositive weight are
                             // never included
};

// Same solver with rational weights (used by the fractional-chromatic
// pricing step).  Degree-2 folding is applied only when the exchange
// argument justifying it holds for the given weights.
WeightedMisResult alpha_weighted(const SimpleGraph& g,
                                 const std::vector<Rational>& w);

struct AvoidResult {
  bool possible;
  std::vector<int> witness;  // maximum independent set avoiding T when possible
};

// True iff alpha(G - T) = alpha(G): some maximum independent set avoids T.
AvoidResult has_mis_avoiding(const SimpleGraph& g, const std::vector<int>& t);

// True iff alpha(G - v) <= alpha(G) - 1, i.e. v lies in every maximum
// independent set.
bool forall_mis_contain(const SimpleGraph& g, int v);

struct PackingResult {
  int size;
  std::vector<std::vector<int>> witness;  // vertex sets, pairwise disjoint
};

// Maximum number of vertex-disjoint triangles: exact set packing over all
// triangles, solved as an independent set problem on the conflict graph.
PackingResult triangle_packing(const SimpleGraph& g);

// A catalog of pattern graphs together with the order up to which it is
// complete; produced by the family catalogs.
struct SubgraphCatalog {
  int complete_up_to;
  std::vector<SimpleGraph> members;
};

// Maximum number of vertex-disjoint (non-induced) occurrences of catalog
// members in G.  Throws if the catalog is not complete up to |V(G)| or if
// |V(G)| exceeds the documented cap of 40.
PackingResult bad_packing(const SimpleGraph& g, const SubgraphCatalog& catalog);

// (6 |V| - |E| - 2 T(G) - 1) / 12 for connected G; throws on disconnected
// input.
Rational24 lb_T(const SimpleGraph& g);

}  // namespace tflab
