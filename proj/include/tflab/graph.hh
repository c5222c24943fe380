#pragma once
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tflab/rational24.hh"

namespace tflab {

// Immutable undirected simple graph over dense 0-based vertex ids.
// Invariants: no loops, no parallel edges, adjacency symmetric, neighbor
// lists sorted ascending, m = half the degree sum. All editors return new
// graphs; deletions additionally return the id remapping.
struct SimpleGraph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  // all edges as (u,v) with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const SimpleGraph&) const = default;
};

SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

SimpleGraph add_edge(const SimpleGraph& g, int u, int v);
SimpleGraph delete_edge(const SimpleGraph& g, int u, int v);

struct VertexDeletion {
  SimpleGraph g;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};
VertexDeletion delete_vertices(const SimpleGraph& g, const std::vector<int>& del);

// Subgraph induced on `verts` (need not be sorted); vertex i of the result is
// verts[i] after sorting. Optionally reports the new->old map.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts,
                             std::vector<int>* new_to_old = nullptr);

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

std::vector<std::vector<int>> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);  // exactly one component (empty graph: false)

// counts[d] = number of vertices of degree d; size = max(4, maxdeg+1)
std::vector<int> degree_counts(const SimpleGraph& g);

bool is_triangle_free(const SimpleGraph& g);
bool max_degree_at_most(const SimpleGraph& g, int d);
bool is_cubic(const SimpleGraph& g);

inline constexpr int kGirthInfinite = std::numeric_limits<int>::max();
// length of a shortest cycle; kGirthInfinite for forests
int girth(const SimpleGraph& g);

// All k-cycles, each reported once up to rotation/reflection, as a vertex
// sequence starting at the cycle's smallest vertex.
std::vector<std::vector<int>> cycles_of_length(const SimpleGraph& g, int k);

std::vector<int> cut_vertices(const SimpleGraph& g);

enum class ConnectivityClass { disconnected, one, two, three_plus };
const char* to_string(ConnectivityClass c);
// Vertex connectivity capped at 3 (cutvertex search, then exhaustive 2-cutset
// search). K1 is reported as `one` by convention: it is connected and the
// finer distinction is never needed here.
ConnectivityClass connectivity_class(const SimpleGraph& g);

// (6|V| - |E| - lambda)/12 where lambda = number of components. Requires max
// degree <= 3; computed both directly and via the degree-count form
// (9 n3 + 10 n2 + 11 n1 + 12 n0 - 2 lambda)/24, which must agree exactly.
Rational24 lb(const SimpleGraph& g);

}  // namespace tflab
