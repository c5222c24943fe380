#pragma once
#include <string>
#include <string_view>

#include "tflab/graph.hh"

namespace tflab {

// graph6: printable encoding of a simple graph. Size field N(n) is n+63 for
// n <= 62, '~' + 3 bytes for 63 <= n <= 258047, '~~' + 6 bytes above that.
// Then the upper triangle in column order x(0,1),x(0,2),x(1,2),x(0,3),...,
// zero-padded to a multiple of 6 bits, each 6-bit group encoded as value+63.
// parse accepts an optional ">>graph6<<" header and is strict about byte
// range and length; to_graph6 always emits the canonical (zero-padded,
// headerless) form, so parse(to_graph6(G)) == G and to_graph6(parse(s)) == s
// for canonical s.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

}  // namespace tflab
