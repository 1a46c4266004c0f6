#include "gt/fraction.hpp"

#include <stdexcept>

namespace gt {

ColorSet color_availability(const GraphCollection& coll, int u, int v) {
  if (u == v) throw std::invalid_argument("color_availability: u == v");
  if (u < 0 || v < 0 || u >= coll.vertex_count() || v >= coll.vertex_count())
    throw std::out_of_range("color_availability: vertex out of range");
  ColorSet avail(coll.color_count());
  for (int c = 0; c < coll.color_count(); ++c)
    if (coll.layer(c).adjacent(u, v)) avail.set(c);
  return avail;
}

Graph fraction_graph(const GraphCollection& coll, const ColorSet& colors, const Rational& eta) {
  if (colors.universe() != coll.color_count())
    throw std::invalid_argument("fraction_graph: color universe mismatch");
  if (colors.none()) throw std::invalid_argument("fraction_graph: empty color set");
  if (eta.num() <= 0 || eta > Rational(1)) throw std::invalid_argument("fraction_graph: need 0 < eta <= 1");

  const int n = coll.vertex_count();
  const long long c_size = colors.count();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      long long hits = 0;
      for (int c = colors.first(); c >= 0; c = colors.next(c))
        if (coll.layer(c).adjacent(u, v)) ++hits;
      // hits >= eta * |C|
      if (hits * eta.den() >= eta.num() * c_size) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace gt
