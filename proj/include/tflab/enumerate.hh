// Isomorph-free generation of connected subcubic graphs, and graph6 stream
// ingestion for externally produced corpora.
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tflab/graph.hh"

namespace tflab {

// Constraint set for generation. Defaults describe the main corpus used
// throughout: connected triangle-free subcubic graphs.
struct GenConstraints {
  int max_n = 0;
  bool cubic_only = false;    // emit only 3-regular graphs
  int min_girth = 0;          // 0 = no constraint beyond triangle_free
  int min_connectivity = 1;   // 1, 2, or 3 (post-filter for 2 and 3)
  bool triangle_free = true;
  bool critical_only = false; // post-filter: every edge critical
  // 0 = use the mode default (18 general, 40 when cubic_only); raising the
  // cap is a deliberate configuration choice by the caller.
  int cap = 0;
};

// Streams one representative per isomorphism class of every connected graph
// satisfying the constraints, ordered deterministically (search preorder,
// independent of `jobs`). Canonical-augmentation search: each child must be
// reachable from its parent by deleting the accepted new vertex, which is
// required to lie in the automorphism orbit of the canonical non-cutvertex
// of maximal canonical rank. Throws std::invalid_argument on inconsistent
// constraints and std::length_error when max_n exceeds the cap.
void generate(const GenConstraints& c,
              const std::function<void(const SimpleGraph&)>& emit,
              int jobs = 1);

std::vector<SimpleGraph> generate_all(const GenConstraints& c, int jobs = 1);

// One parsed line of a graph6 stream (1-based line number).
struct IngestItem {
  int line = 0;
  SimpleGraph g;
};
struct IngestError {
  int line = 0;
  std::string message;
};
struct IngestResult {
  std::vector<IngestItem> items;
  std::vector<IngestError> errors;
};

// Parses newline-delimited graph6. Blank lines are skipped. Parse failures
// (and, when `revalidate` is given, constraint violations) are collected
// with their line numbers; with strict=true the first failure throws
// std::runtime_error instead. Revalidation checks max degree, triangle-
// freeness, girth, connectivity class, regularity, and criticality as
// requested by the constraint set (max_n/cap are ignored).
IngestResult ingest_graph6(std::istream& in,
                           const GenConstraints* revalidate = nullptr,
                           bool strict = false);

}  // namespace tflab
