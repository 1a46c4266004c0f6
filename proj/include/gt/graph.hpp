#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gt/bitset.hpp"

namespace gt {

class GraphBuilder;

// Immutable dense graph on vertices 0..n-1. Adjacency is symmetric and
// irreflexive, stored as one bit row per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }
  static Graph path(int n);
  static Graph cycle(int n);
  // k-th power of the cycle: ij is an edge iff the cyclic distance is <= k.
  static Graph cycle_power(int n, int k);
  // k-th power of the path on [0,n): ij is an edge iff |i-j| <= k.
  static Graph path_power(int n, int k);
  static Graph complete_multipartite(const std::vector<int>& part_sizes);
  static Graph disjoint_cliques(int count, int k);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return rows_[v].count(); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  std::vector<std::pair<int, int>> edges() const;  // ascending (u, v), u < v

  bool is_clique(const VertexSet& q) const;
  Graph induced(const std::vector<int>& keep) const;  // vertices relabelled 0..k-1 in `keep` order

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> rows_;
};

// Mutable staging area for generators; freeze with build().
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  int vertex_count() const { return g_.n_; }
  bool has_edge(int u, int v) const { return g_.rows_[u].test(v); }
  int degree(int v) const { return g_.rows_[v].count(); }
  const VertexSet& neighbors(int v) const { return g_.rows_[v]; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph build() { return std::move(g_); }

 private:
  Graph g_;
};

// h graphs sharing one vertex set, indexed by color 0..h-1.
class GraphCollection {
 public:
  GraphCollection(int n, std::vector<Graph> layers);

  int vertex_count() const { return n_; }
  int color_count() const { return static_cast<int>(layers_.size()); }
  const Graph& layer(int c) const { return layers_[c]; }
  const std::vector<Graph>& layers() const { return layers_; }
  // Union over all layers; an edge is present iff some layer has it.
  const Graph& union_graph() const { return union_; }

 private:
  int n_;
  std::vector<Graph> layers_;
  Graph union_;
};

// ---- graph-core operations ----

// min over v of degree(v); rejects the empty graph.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Intersection of the neighbor rows over all x in X; X must be nonempty.
// Members of X may appear in the result when adjacent to all of X.
VertexSet common_neighborhood(const Graph& g, const VertexSet& x);

// Up to `limit` k-cliques in lexicographic order of sorted vertex tuples.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k, long long limit);

// Extends the clique Q to a k-clique when one exists (guaranteed by the
// minimum-degree bound delta >= (1 - 1/(k-1)) n + 1). Lexicographically
// smallest extension; nullopt when no k-clique contains Q.
std::optional<VertexSet> extend_clique(const Graph& g, const VertexSet& q, int k);

}  // namespace gt
