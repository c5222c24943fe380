// Constructors, catalogs, and recognizers for the named graph families (bad,
// dangerous, almost-bad, the six forbidden graphs, G41, the families T and
// T-minus, and the tree-patterned block construction), plus the deficit
// kappa and the classification of connected triangle-free subcubic graphs by
// independence ratio 11/30.
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tflab/alpha.hh"
#include "tflab/graph.hh"

namespace tflab {

// ---------------------------------------------------------------------------
// Corners and the 8-augmentation
// ---------------------------------------------------------------------------

// A corner (a,b,c): deg(a)=3, deg(b)=deg(c)=2, ab and bc edges, ac a
// non-edge.  The interface holds a's two neighbors outside {a,b,c}
// (ascending) followed by c's one; the three are pairwise distinct.
struct Corner {
  int a = -1, b = -1, c = -1;
  std::array<int, 3> iface{{-1, -1, -1}};
};

// All corners of a subcubic graph, sorted by (a,b,c).  Triples whose
// interface vertices are not pairwise distinct do not qualify.
std::vector<Corner> find_corners(const SimpleGraph& g);

// The pinned 8-vertex base of the bad family: triangle-free, subcubic,
// 2-connected, critical, four degree-2 vertices inducing a size-two
// matching, alpha = 3.
SimpleGraph b8();

// The 11-vertex replacement gadget of the 8-augmentation, with fixed labels:
// attachment vertices L1..L3 = 0..2, middle M1..M3 = 3..5, right R1..R5 =
// 6..10 (R4R5 = (9,10) is the adjacent degree-2 pair).  Edges: the 6-cycle
// L1-M1-L2-M2-L3-M3-L1, spokes M1R1/M2R2/M3R3, and the 5-cycle R1..R5.
// First use verifies alpha = 5, that every maximum independent set contains
// L1,L2,L3, and that alpha(gadget - {L1,L2,L3}) >= 4; throws if violated.
const SimpleGraph& augmentation_gadget();

// Deletes {a,b,c} and wires the gadget in by the size-3 matching
// iface[k] -- L_{matching[k]}.  `matching` must be a permutation of {0,1,2}.
// Asserts alpha(result) = alpha(g)+3 and lb(result) = lb(g)+3; throws
// std::invalid_argument on a stale corner or non-permutation matching.
SimpleGraph augment8(const SimpleGraph& g, const Corner& corner,
                     const std::array<int, 3>& matching);

// ---------------------------------------------------------------------------
// Construction traces
// ---------------------------------------------------------------------------

struct ConstructionTrace;

// One replayable construction step.  Ops and their integer arguments:
//   "augment8"       a b c m0 m1 m2          (corner + matching permutation)
//   "sum"            l1[5] l2[5] v1a1 v1a2   (labels a,b,c,d,e per side +
//                                            wiring bits; one operand)
//   "join"           a1 b1 c1 a2 b2 c2       (corners; one operand)
//   "contract"       p0 p1 p2 p3             (nice path in current labels)
//   "thirty_augment" e0 .. e10               (induced F11 embedding)
// Steps that combine two graphs carry the second operand's trace inline, so
// every trace replays without external context.
struct TraceStep {
  std::string op;
  std::vector<int> args;
  std::vector<ConstructionTrace> operands;

  bool operator==(const TraceStep&) const;
};

// Base names: "B8", "C5", "F11", or a tree spec "tree:<n>:<u-v>,<u-v>,..."
// for the tree-patterned block construction.
struct ConstructionTrace {
  std::string base;
  std::vector<TraceStep> steps;

  bool operator==(const ConstructionTrace&) const;
};

struct CatalogEntry {
  SimpleGraph g;
  ConstructionTrace trace;
};

// Rebuilds the graph from its trace; the result equals the recorded graph
// vertex-for-vertex, not merely up to isomorphism.
SimpleGraph replay(const ConstructionTrace& trace);

// Single-line JSON round-trip for sidecar trace files.
std::string trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const std::string& line);

// Writes one graph6 line per entry plus a parallel JSON-lines trace file.
void export_catalog(const std::vector<CatalogEntry>& catalog,
                    std::ostream& graph6_out, std::ostream& traces_out);

// ---------------------------------------------------------------------------
// Bad graphs: closure of {B8} under 8-augmentation
// ---------------------------------------------------------------------------

// Catalog of all bad graphs with at most max_n vertices (sizes 8, 16, 24,
// ...), deduped up to isomorphism, sorted by (n, canonical key).  Built once
// per cap and cached; the returned reference stays valid.
const std::vector<CatalogEntry>& enumerate_bad(int max_n = 32);

bool is_bad(const SimpleGraph& g, int max_n = 32);

// The two 16-vertex bad graphs.  b16_1 is the one with no maximum
// independent set avoiding all four of its degree-2 vertices (the one that
// behaves like B8); b16_2 has such a set.
SimpleGraph b16_1();
SimpleGraph b16_2();

// Full property suite for one bad graph: triangle-free, subcubic,
// 2-connected; exactly four degree-2 vertices inducing a size-two matching;
// alpha = lb - 1/12; every three degree-2 vertices avoidable by a maximum
// independent set, with all four avoidable exactly when the graph is neither
// B8 nor b16_1; and for members other than those two, no edge lying in every
// 6-cycle.  Throws std::runtime_error naming the first violated property.
void check_bad_properties(const SimpleGraph& b);

// ---------------------------------------------------------------------------
// Dangerous graphs: closure of {C5} under sum, 8-augmentation, and joins of
// two bad graphs
// ---------------------------------------------------------------------------

// Labeling of both operands for the sum: label*[0..4] = the degree-2
// vertices in roles a,b,c,d,e with d,e adjacent.  New vertices u,v1,v2 are
// appended (u first) with edges uv1 and uv2; each of a1,b1,a2,b2 is joined
// to v1 or v2 as directed by attach (entry k targets {a1,b1,a2,b2}[k];
// 0 = v1, 1 = v2; each of v1,v2 must take exactly two), and the edge c1c2
// is added.  Assignments that would place two adjacent vertices on the same
// new vertex are rejected (they would close a triangle).
struct SumWiring {
  std::array<int, 5> label1{{-1, -1, -1, -1, -1}};
  std::array<int, 5> label2{{-1, -1, -1, -1, -1}};
  std::array<int, 4> attach{{0, 1, 0, 1}};
};

// Disjoint union of d1 and d2 (d2's vertices shifted by d1.n) plus the
// wiring above.  Validates the labelings and checks the result against the
// structural dangerous-graph properties (five degree-2 vertices inducing an
// isolated vertex plus a size-two matching, triangle-free, subcubic,
// 2-connected, alpha >= lb, a 5-cycle present); throws on violation.
SimpleGraph sum_dangerous(const SimpleGraph& d1, const SimpleGraph& d2,
                          const SumWiring& wiring);

// Join of two bad graphs on chosen corners: disjoint union (h2 shifted by
// h1.n), then b1, b2, c2 are removed and the edges c1a2 and a1y2 added,
// where y2 is c2's neighbor other than b2.  Validated like sum_dangerous.
SimpleGraph join_bad(const SimpleGraph& h1, const Corner& corner1,
                     const SimpleGraph& h2, const Corner& corner2);

// Catalog of all dangerous graphs with at most max_n vertices (sizes 5, 13,
// 21, ...), deduped, sorted by (n, canonical key), cached.
const std::vector<CatalogEntry>& enumerate_dangerous(int max_n = 29);

bool is_dangerous(const SimpleGraph& g, int max_n = 29);

// Full property suite for one dangerous graph, including the avoidance
// properties: for every two degree-2 vertices T, and for every three
// degree-2 vertices T whose complement pair is non-adjacent, an independent
// set of size lb(D) avoids T.  Throws std::runtime_error on violation.
void check_dangerous_properties(const SimpleGraph& d);

// ---------------------------------------------------------------------------
// Almost-bad graphs: nice-path contractions of bad graphs
// ---------------------------------------------------------------------------

// A 4-vertex path p[0]p[1]p[2]p[3] whose interior vertices p[1],p[2] have
// degree 2; stored with p[1] < p[2].
struct NicePath {
  std::array<int, 4> p{{-1, -1, -1, -1}};
};

// The nice paths of a bad graph (throws if b is not in the bad catalog);
// every bad graph has exactly two, one per degree-2 matching edge.
std::vector<NicePath> nice_paths(const SimpleGraph& b);

// Removes the two interior vertices and adds the endpoint edge (which must
// not already exist).  Throws on an invalid path or a non-bad input.
SimpleGraph contract_nice_path(const SimpleGraph& b, const NicePath& path);

// All single and double nice-path contractions of bad graphs on at most
// max_n + 4 vertices, dropping any result isomorphic to K4, deduped, sorted
// by (n, canonical key), cached.
const std::vector<CatalogEntry>& enumerate_almost_bad(int max_n = 28);

bool is_almost_bad(const SimpleGraph& g, int max_n = 28);

// Pattern catalog for bad_packing: every bad or almost-bad graph with at
// most complete_up_to vertices.
SubgraphCatalog bad_or_almost_bad_catalog(int complete_up_to);

// ---------------------------------------------------------------------------
// The six forbidden graphs
// ---------------------------------------------------------------------------

struct ForbiddenSix {
  SimpleGraph f11, f14_1, f14_2, f19_1, f19_2, f22;
};

// Pinned fixtures, validated on first use against their expected
// parameters (degree-3 count, degree-2 count, alpha, 24*lb) and
// 2-connectivity; throws std::runtime_error on any mismatch.
const ForbiddenSix& forbidden_six();

// Name -> fixture in increasing order of size: F11, F14_1, F14_2, F19_1,
// F19_2, F22.  F14/F19 indices are assigned by ascending canonical key.
const std::vector<std::pair<std::string, SimpleGraph>>& forbidden_in_size_order();

// Regeneration oracles; each returns iso-classes sorted by canonical key.
std::vector<SimpleGraph> derive_b8_classes(int jobs = 1);   // expect 1
std::vector<SimpleGraph> derive_f11_classes();              // expect 1
std::vector<SimpleGraph> derive_f19_classes();              // expect 2
std::vector<SimpleGraph> derive_f14_classes(int jobs = 1);  // expect 2
// The eight literal completions of (C5 + pendant) onto b16_1 minus its
// unique edge lying in every 6-cycle, in wiring order (not deduped).
std::vector<SimpleGraph> derive_f22_candidates();
// The admissible-gadget search at n = 11; expect exactly one class.
std::vector<SimpleGraph> admissible_gadgets(int jobs = 1);

// ---------------------------------------------------------------------------
// Independence ratio 11/30: G41, 30-augmentations, T and T-minus
// ---------------------------------------------------------------------------

// B8 with three of its four degree-2 vertices each joined by an edge to the
// degree-2 vertex of a fresh F11 copy; the four choices of triple agree up
// to isomorphism (asserted).  n = 41, alpha = 15, one degree-2 vertex.
SimpleGraph g41();

// Replaces an induced F11 occurrence by a copy of G41, reconnecting the one
// outside edge (if any) at the degree-2 vertex.  `f11_embedding[i]` = image
// in g of vertex i of the f11 fixture; every image except the degree-2
// vertex's must have no neighbors outside the occurrence, and the degree-2
// image at most one.  Throws std::invalid_argument on a bad embedding.
SimpleGraph thirty_augment(const SimpleGraph& g,
                           const std::vector<int>& f11_embedding);

// 30*alpha(G) - 11*|V(G)|: invariant under 30-augmentation.
long long kappa(const SimpleGraph& g);

// T: closure of {two F11 copies joined at their degree-2 vertices} under
// 30-augmentation (sizes 22, 52, ...); T-minus: closure of {F11} (sizes 11,
// 41, ...).  Sorted by (n, canonical key), cached.
const std::vector<CatalogEntry>& family_T(int max_n = 52);
const std::vector<CatalogEntry>& family_T_minus(int max_n = 41);

// Five-way outcome for a connected triangle-free subcubic graph:
// 30*alpha = 11n - 4 for the two F14s, 11n - 2 for F22 and members of T,
// 11n - 1 for members of T-minus, and alpha >= 11n/30 otherwise.
enum class Ratio1130 { f14, f22, in_T, in_T_minus, general };
const char* to_string(Ratio1130 c);
Ratio1130 classify_11_30(const SimpleGraph& g);

// Tree-patterned block construction: every internal node of the tree (degree
// exactly 4) becomes a B8 copy, every leaf an F11 copy, adjacent nodes
// linked by an edge between degree-2 vertices (one per incident tree edge).
// Asserts alpha = 3*(#internal) + 4*(#leaves); throws std::invalid_argument
// on anything but a tree with >= 2 nodes and internal degrees 4.
SimpleGraph fl_construction(const SimpleGraph& tree);

}  // namespace tflab
