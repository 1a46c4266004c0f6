#include <doctest.h>

#include "gt/fraction.hpp"
#include "gt/graph.hpp"
#include "oracles.hpp"

using namespace gt;

namespace {
// n=3, layers G1={01}, G2={01,12}, G3={12} (0-based colors 0,1,2)
GraphCollection demo_collection() {
  Graph g1 = Graph::from_edges(3, {{0, 1}});
  Graph g2 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph g3 = Graph::from_edges(3, {{1, 2}});
  return GraphCollection(3, {g1, g2, g3});
}
}  // namespace

TEST_CASE("color availability on the demo collection") {
  GraphCollection coll = demo_collection();
  CHECK(color_availability(coll, 0, 1) == ColorSet::of(3, {0, 1}));
  CHECK(color_availability(coll, 1, 2) == ColorSet::of(3, {1, 2}));
  CHECK(color_availability(coll, 0, 2) == ColorSet(3));
  CHECK(color_availability(coll, 1, 0) == ColorSet::of(3, {0, 1}));  // symmetric
  CHECK_THROWS(color_availability(coll, 1, 1));
}

TEST_CASE("fraction graph examples") {
  GraphCollection coll = demo_collection();
  ColorSet all = ColorSet::full(3);

  Graph g23 = fraction_graph(coll, all, Rational(2, 3));
  CHECK(g23.adjacent(0, 1));
  CHECK(g23.adjacent(1, 2));
  CHECK_FALSE(g23.adjacent(0, 2));
  CHECK(g23.edge_count() == 2);

  CHECK(fraction_graph(coll, all, Rational(1)).edge_count() == 0);

  Graph single = fraction_graph(coll, ColorSet::of(3, {1}), Rational(1));
  CHECK(single == coll.layer(1));

  CHECK_THROWS(fraction_graph(coll, ColorSet(3), Rational(1, 2)));
  CHECK_THROWS(fraction_graph(coll, all, Rational(0)));
  CHECK_THROWS(fraction_graph(coll, all, Rational(3, 2)));
}

TEST_CASE("fraction graph cross-checks against availability") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    int n = 4 + static_cast<int>(rng.below(5));
    int h = 2 + static_cast<int>(rng.below(5));
    std::vector<Graph> layers;
    for (int c = 0; c < h; ++c) layers.push_back(oracle::random_graph(n, {1, 2}, seed * 100 + c));
    GraphCollection coll(n, std::move(layers));

    ColorSet colors(h);
    for (int c = 0; c < h; ++c)
      if (rng.below(2)) colors.set(c);
    if (colors.none()) colors.set(0);

    for (Rational eta : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
      Graph f = fraction_graph(coll, colors, eta);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          int avail = color_availability(coll, u, v).intersection_count(colors);
          bool expect = Rational(avail, colors.count()) >= eta;
          CHECK(f.adjacent(u, v) == expect);
        }
    }
  }
}

TEST_CASE("monotonicity in eta") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    int n = 6, h = 5;
    std::vector<Graph> layers;
    for (int c = 0; c < h; ++c) layers.push_back(oracle::random_graph(n, {3, 5}, seed * 50 + c));
    GraphCollection coll(n, std::move(layers));
    ColorSet all = ColorSet::full(h);
    Graph loose = fraction_graph(coll, all, Rational(1, 4));
    Graph tight = fraction_graph(coll, all, Rational(3, 4));
    for (auto [u, v] : tight.edges()) CHECK(loose.adjacent(u, v));
  }
}

TEST_CASE("min-degree inheritance") {
  // delta(G^eta) >= (delta - eta) n with delta = min_i delta(G_i) / n,
  // checked exactly in rational arithmetic
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Rng rng(seed);
    int n = 4 + static_cast<int>(rng.below(21));  // 4..24
    int h = 1 + static_cast<int>(rng.below(24));  // 1..24
    std::vector<Graph> layers;
    for (int c = 0; c < h; ++c)
      layers.push_back(oracle::random_graph(n, {2, 3}, hash_mix(seed, c)));
    GraphCollection coll(n, std::move(layers));

    int d_min = n;
    for (int c = 0; c < h; ++c) d_min = std::min(d_min, min_degree(coll.layer(c)));
    Rational delta(d_min, n);

    for (Rational eta : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      Graph frac = fraction_graph(coll, ColorSet::full(h), eta);
      Rational bound = (delta - eta) * Rational(n);
      CHECK(Rational(min_degree(frac)) >= bound);
    }
  }
}
