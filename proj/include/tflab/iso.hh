// Canonical forms, isomorphism tests, and subgraph containment.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tflab/graph.hh"

namespace tflab {

// Result of canonical labeling.
//   canon_pos[v] : position of vertex v in the canonical labeling
//   key          : graph6 string of the canonically relabeled graph; when an
//                  initial coloring is supplied, a ";color:size,..." suffix is
//                  appended so that equal keys mean color-preserving isomorphy
//   orbit[v]     : smallest vertex in v's automorphism orbit (exact orbits of
//                  the full automorphism group; for colored inputs, of the
//                  color-preserving group)
struct CanonResult {
  std::vector<int> canon_pos;
  std::string key;
  std::vector<int> orbit;
};

// Deterministic canonical labeling by iterative equitable refinement plus
// backtracking over the first non-singleton cell (lowest-index vertices
// first).  Throws if n exceeds `cap` or the search exceeds an internal
// safety budget (astronomically symmetric inputs only).
CanonResult canonicalize(const SimpleGraph& g,
                         const std::vector<int>* colors = nullptr,
                         int cap = 64);

std::string canonical_key(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Injective map from H-vertices to G-vertices preserving adjacency
// (and non-adjacency when produced in induced mode).
struct Embedding {
  std::vector<int> map;  // map[h] = image of H-vertex h in G
};

// Backtracking subgraph search with degree and adjacency pruning.
// Returns a witness embedding of H into G, or nullopt.
std::optional<Embedding> find_subgraph(const SimpleGraph& h,
                                       const SimpleGraph& g, bool induced);

// All distinct vertex sets of G that host a copy of H (sorted sets, sorted
// lexicographically); automorphic re-embeddings onto the same set count once.
std::vector<std::vector<int>> all_occurrence_vertex_sets(const SimpleGraph& h,
                                                         const SimpleGraph& g,
                                                         bool induced);

// Checks the six forbidden fixtures in increasing order of size using
// non-induced containment; returns the first hit's name ("F11", "F14_1",
// "F14_2", "F19_1", "F19_2", "F22") or nullopt.  Defined with the family
// catalogs (it needs their fixtures).
std::optional<std::string> contains_any_forbidden(const SimpleGraph& g);

}  // namespace tflab
