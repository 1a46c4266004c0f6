#pragma once

#include "gt/graph.hpp"
#include "gt/rational.hpp"

namespace gt {

// Colors whose layer contains the edge uv.
ColorSet color_availability(const GraphCollection& coll, int u, int v);

// Graph of vertex pairs present in at least an eta-fraction of the layers
// indexed by C. The threshold |avail ∩ C| >= eta |C| is decided by integer
// cross-multiplication, so boundary cases are bit-exact. Requires C nonempty
// and 0 < eta <= 1; eta = 0 would admit pairs with empty availability.
Graph fraction_graph(const GraphCollection& coll, const ColorSet& colors, const Rational& eta);

}  // namespace gt
