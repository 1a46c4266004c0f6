#include <doctest.h>

#include <sstream>

#include "gt/bitset.hpp"
#include "gt/graph.hpp"
#include "gt/io.hpp"
#include "gt/rational.hpp"
#include "gt/rng.hpp"
#include "oracles.hpp"

using namespace gt;

TEST_CASE("rational arithmetic and comparison") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 7) < Rational(4, 7));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK((Rational(7, 3) - Rational(1, 3)) == Rational(2));
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("0.75") == Rational(3, 4));
  CHECK(Rational::parse("2") == Rational(2));
}

TEST_CASE("tolerance with roots") {
  // |x| <= (1/4)^(1/2) = 1/2
  Tolerance t = Tolerance::nth_root(Rational(1, 4), 2);
  CHECK(t.admits_abs(Rational(1, 2)));
  CHECK(t.admits_abs(Rational(-1, 2)));
  CHECK_FALSE(t.admits_abs(Rational(501, 1000)));
  // boundary exactness: (1/2)^2 = 1/4 exactly
  CHECK(t.admits_abs(Rational(1, 2)));

  // x >= (1/64)^(1/6) = 1/2
  Tolerance s = Tolerance::nth_root(Rational(1, 64), 6);
  CHECK(s.at_least(Rational(1, 2)));
  CHECK_FALSE(s.at_least(Rational(499, 1000)));

  Tolerance plain(Rational(1, 3));
  CHECK(plain.admits_abs(Rational(1, 3)));
  CHECK_FALSE(plain.admits_abs(Rational(34, 100)));
}

TEST_CASE("bitset basics") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.items() == std::vector<int>{0, 64, 129});
  CHECK(b.next(0) == 64);
  CHECK(b.next(64) == 129);
  CHECK(b.next(129) == -1);
  Bitset c = Bitset::of(130, {64, 100});
  CHECK((b & c).items() == std::vector<int>{64});
  CHECK(b.intersects(c));
  CHECK(Bitset::of(130, {64}).subset_of(b));
  CHECK_THROWS(b.set(130));
}

TEST_CASE("rng determinism and exact bernoulli") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng r(7);
  int hits = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i)
    if (r.bernoulli(Rational(1, 4))) ++hits;
  CHECK(hits > trials / 4 - 300);
  CHECK(hits < trials / 4 + 300);
  CHECK(splitmix64(1) == splitmix64(1));
  CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("min_degree examples") {
  CHECK(min_degree(Graph::complete(4)) == 3);
  CHECK(min_degree(Graph::edgeless(5)) == 0);
  CHECK(min_degree(Graph::cycle(5)) == 2);
  CHECK_THROWS(min_degree(Graph(0)));
}

TEST_CASE("common_neighborhood examples") {
  Graph k4 = Graph::complete(4);
  CHECK(common_neighborhood(k4, VertexSet::of(4, {0, 1})) == VertexSet::of(4, {2, 3}));

  Graph c5 = Graph::cycle(5);  // 0-1-2-3-4-0
  CHECK(common_neighborhood(c5, VertexSet::of(5, {0, 2})) == VertexSet::of(5, {1}));

  Graph p3 = Graph::path(3);  // 0-1-2
  CHECK(common_neighborhood(p3, VertexSet::of(3, {0, 2})) == VertexSet::of(3, {1}));

  CHECK_THROWS(common_neighborhood(k4, VertexSet(4)));
}

TEST_CASE("common_neighborhood antitone in X") {
  Graph g = oracle::random_graph(10, {1, 2}, 99);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    VertexSet x(10);
    int size = rng.range(2, 4);
    while (x.count() < size) x.set(rng.range(0, 9));
    VertexSet sub = x;
    sub.reset(x.first());  // proper nonempty subset when size >= 2
    if (sub.none()) continue;
    CHECK(common_neighborhood(g, x).subset_of(common_neighborhood(g, sub)));
  }
}

TEST_CASE("enumerate_cliques examples") {
  Graph k4 = Graph::complete(4);
  auto tri = enumerate_cliques(k4, 3, 10);
  REQUIRE(tri.size() == 4);
  CHECK(tri[0] == VertexSet::of(4, {0, 1, 2}));
  CHECK(tri[1] == VertexSet::of(4, {0, 1, 3}));
  CHECK(tri[2] == VertexSet::of(4, {0, 2, 3}));
  CHECK(tri[3] == VertexSet::of(4, {1, 2, 3}));

  CHECK(enumerate_cliques(Graph::cycle(5), 3, 10).empty());

  GraphBuilder b(Graph::complete(4));
  b.remove_edge(0, 1);
  auto tri2 = enumerate_cliques(b.build(), 3, 10);
  REQUIRE(tri2.size() == 2);
  CHECK(tri2[0] == VertexSet::of(4, {0, 2, 3}));
  CHECK(tri2[1] == VertexSet::of(4, {1, 2, 3}));

  CHECK(enumerate_cliques(k4, 3, 2).size() == 2);  // limit respected
  CHECK_THROWS(enumerate_cliques(k4, 0, 10));
  CHECK_THROWS(enumerate_cliques(k4, 5, 10));
}

TEST_CASE("enumerate_cliques agrees with subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = oracle::random_graph(9, {1, 2}, seed);
    for (int k = 1; k <= 4; ++k) {
      auto got = enumerate_cliques(g, k, 1'000'000);
      auto want = oracle::naive_cliques(g, k);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].items() == want[i]);
    }
  }
}

TEST_CASE("extend_clique examples") {
  Graph k5 = Graph::complete(5);
  auto got = extend_clique(k5, VertexSet::of(5, {0, 1}), 4);
  REQUIRE(got.has_value());
  CHECK(*got == VertexSet::of(5, {0, 1, 2, 3}));

  CHECK_FALSE(extend_clique(Graph::cycle(5), VertexSet::of(5, {0, 1}), 3).has_value());

  // K6 minus the perfect matching {03,14,25}
  GraphBuilder b(Graph::complete(6));
  b.remove_edge(0, 3);
  b.remove_edge(1, 4);
  b.remove_edge(2, 5);
  Graph g = b.build();
  auto tri = extend_clique(g, VertexSet::of(6, {0, 1}), 3);
  REQUIRE(tri.has_value());
  CHECK(g.is_clique(*tri));
  CHECK(VertexSet::of(6, {0, 1}).subset_of(*tri));

  CHECK_THROWS(extend_clique(g, VertexSet::of(6, {0, 3}), 3));  // not a clique
}

TEST_CASE("clique extension guarantee at the minimum-degree bound") {
  // delta >= (1 - 1/(k-1)) n + 1 makes every k'-clique extendable, k' <= k <= 4
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400 && checked < 60; ++seed) {
    Rng rng(seed);
    int n = 6 + static_cast<int>(rng.below(7));  // 6..12
    Graph g = oracle::random_graph(n, {4, 5}, seed * 31);
    for (int k = 3; k <= 4; ++k) {
      // need delta(g) >= (1 - 1/(k-1)) n + 1
      if (Rational(min_degree(g)) < Rational(k - 2, k - 1) * Rational(n) + Rational(1)) continue;
      ++checked;
      for (int kp = 1; kp <= k; ++kp) {
        for (const VertexSet& q : enumerate_cliques(g, kp, 50)) {
          auto ext = extend_clique(g, q, k);
          REQUIRE(ext.has_value());
          CHECK(g.is_clique(*ext));
          CHECK(q.subset_of(*ext));
          CHECK(ext->count() == k);
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("graph cap enforced") { CHECK_THROWS(Graph(5000)); }

TEST_CASE("collection file round trip and validation") {
  std::string text =
      "# demo collection\n"
      "3 3\n"
      "0 0 1\n"
      "1 0 1\n"
      "1 1 2\n"
      "2 1 2  # trailing comment\n";
  std::istringstream in(text);
  GraphCollection coll = read_collection(in);
  CHECK(coll.vertex_count() == 3);
  CHECK(coll.color_count() == 3);
  CHECK(coll.layer(0).adjacent(0, 1));
  CHECK(coll.layer(1).adjacent(1, 2));
  CHECK_FALSE(coll.layer(2).adjacent(0, 1));

  std::ostringstream out;
  write_collection(out, coll);
  std::istringstream in2(out.str());
  GraphCollection coll2 = read_collection(in2);
  for (int c = 0; c < 3; ++c) CHECK(coll.layer(c) == coll2.layer(c));

  std::istringstream dup("2 1\n0 0 1\n0 0 1\n");
  CHECK_THROWS(read_collection(dup));
  std::istringstream reversed("2 1\n0 1 0\n");
  CHECK_THROWS(read_collection(reversed));
  std::istringstream badc("2 1\n1 0 1\n");
  CHECK_THROWS(read_collection(badc));
}

TEST_CASE("target file round trip with order line") {
  std::string text = "4\n0 1\n1 2\n2 3\norder: 3 2 1 0\n";
  std::istringstream in(text);
  TargetFile t = read_target(in);
  CHECK(t.graph.edge_count() == 3);
  REQUIRE(t.order.has_value());
  CHECK(*t.order == std::vector<int>{3, 2, 1, 0});

  std::ostringstream out;
  write_target(out, t.graph, t.order);
  std::istringstream in2(out.str());
  TargetFile t2 = read_target(in2);
  CHECK(t2.graph == t.graph);
  CHECK(t2.order == t.order);

  std::istringstream badperm("3\n0 1\norder: 0 0 2\n");
  CHECK_THROWS(read_target(badperm));
}
