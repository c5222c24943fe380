// Exact fractional chromatic number via column generation with rational
// arithmetic throughout.
#pragma once

#include "tflab/alpha.hh"
#include "tflab/graph.hh"

namespace tflab {

// Exact value of the covering LP min sum x_I over independent sets I with
// every vertex covered at least once.  Computed on the equivalent packing LP
// (max sum_v y_v subject to sum_{v in I} y_v <= 1 for every independent set
// I) by cutting planes: restricted constraint set seeded with singletons,
// most-violated constraint found by the weighted-MIS pricing oracle,
// terminating when no independent set has weight above 1.  Throws when n
// exceeds `cap`.
Rational fractional_chromatic(const SimpleGraph& g, int cap = 20);

// Independent check: solves the same packing LP with ALL maximal independent
// sets enumerated up front (no pricing loop).  Restricted to n <= 10.
Rational fractional_chromatic_bruteforce(const SimpleGraph& g);

}  // namespace tflab
