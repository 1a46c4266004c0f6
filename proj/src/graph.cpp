#include "gt/graph.hpp"

#include <stdexcept>
#include <string>

namespace gt {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count " + std::to_string(n) + " out of range [0," +
                                std::to_string(kMaxVertices) + "]");
  rows_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph Graph::path(int n) {
  GraphBuilder b(n);
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("Graph::cycle: need n >= 3");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

Graph Graph::cycle_power(int n, int k) {
  if (n < 3) throw std::invalid_argument("Graph::cycle_power: need n >= 3");
  if (k < 1 || 2 * k >= n) throw std::invalid_argument("Graph::cycle_power: need 1 <= k < n/2");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int d = 1; d <= k; ++d) b.add_edge(u, (u + d) % n);
  return b.build();
}

Graph Graph::path_power(int n, int k) {
  if (k < 1) throw std::invalid_argument("Graph::path_power: need k >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n && v - u <= k; ++v) b.add_edge(u, v);
  return b.build();
}

Graph Graph::complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) throw std::invalid_argument("complete_multipartite: negative part");
    n += s;
  }
  std::vector<int> part_of(n);
  int v = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (part_of[u] != part_of[w]) b.add_edge(u, w);
  return b.build();
}

Graph Graph::disjoint_cliques(int count, int k) {
  GraphBuilder b(count * k);
  for (int c = 0; c < count; ++c)
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) b.add_edge(c * k + u, c * k + v);
  return b.build();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(const VertexSet& q) const {
  for (int u = q.first(); u >= 0; u = q.next(u))
    for (int v = q.next(u); v >= 0; v = q.next(v))
      if (!adjacent(u, v)) return false;
  return true;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) throw std::out_of_range("add_edge: vertex out of range");
  if (!g_.rows_[u].test(v)) {
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
    ++g_.edge_count_;
  }
}

void GraphBuilder::remove_edge(int u, int v) {
  if (g_.rows_[u].test(v)) {
    g_.rows_[u].reset(v);
    g_.rows_[v].reset(u);
    --g_.edge_count_;
  }
}

namespace {
Graph union_of(int n, const std::vector<Graph>& layers) {
  GraphBuilder b(n);
  for (const Graph& g : layers)
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b.build();
}
}  // namespace

GraphCollection::GraphCollection(int n, std::vector<Graph> layers)
    : n_(n), layers_(std::move(layers)), union_(union_of(n, layers_)) {
  if (layers_.empty()) throw std::invalid_argument("GraphCollection: need h >= 1");
  for (const Graph& g : layers_)
    if (g.vertex_count() != n) throw std::invalid_argument("GraphCollection: layer vertex count mismatch");
}

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) throw std::invalid_argument("common_neighborhood: universe mismatch");
  if (x.none()) throw std::invalid_argument("common_neighborhood: empty X");
  VertexSet acc = VertexSet::full(g.vertex_count());
  for (int v = x.first(); v >= 0; v = x.next(v)) acc &= g.neighbors(v);
  return acc;
}

namespace {
void clique_dfs(const Graph& g, int k, long long limit, std::vector<int>& cur, const VertexSet& cands,
                std::vector<VertexSet>& out) {
  if (static_cast<long long>(out.size()) >= limit) return;
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(VertexSet::of(g.vertex_count(), cur));
    return;
  }
  int need = k - static_cast<int>(cur.size());
  std::vector<int> options = cands.items();
  if (static_cast<int>(options.size()) < need) return;
  for (int v : options) {
    cur.push_back(v);
    VertexSet next = cands & g.neighbors(v);
    // only extend with larger vertices: yields sorted tuples in lex order
    for (int w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.reset(w);
    clique_dfs(g, k, limit, cur, next, out);
    cur.pop_back();
    if (static_cast<long long>(out.size()) >= limit) return;
  }
}
}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k, long long limit) {
  if (k < 1 || k > g.vertex_count())
    throw std::invalid_argument("enumerate_cliques: need 1 <= k <= n");
  if (limit < 1) throw std::invalid_argument("enumerate_cliques: need limit >= 1");
  std::vector<VertexSet> out;
  std::vector<int> cur;
  clique_dfs(g, k, limit, cur, VertexSet::full(g.vertex_count()), out);
  return out;
}

namespace {
bool extend_dfs(const Graph& g, int k, std::vector<int>& cur, const VertexSet& cands, VertexSet& result,
                const VertexSet& base) {
  if (static_cast<int>(cur.size()) + base.count() == k) {
    result = base;
    for (int v : cur) result.set(v);
    return true;
  }
  for (int v = cands.first(); v >= 0; v = cands.next(v)) {
    cur.push_back(v);
    VertexSet next = cands & g.neighbors(v);
    for (int w = next.first(); w >= 0 && w <= v; w = next.next(w)) next.reset(w);
    if (extend_dfs(g, k, cur, next, result, base)) return true;
    cur.pop_back();
  }
  return false;
}
}  // namespace

std::optional<VertexSet> extend_clique(const Graph& g, const VertexSet& q, int k) {
  int kq = q.count();
  if (kq < 1 || kq > k) throw std::invalid_argument("extend_clique: need 1 <= |Q| <= k");
  if (!g.is_clique(q)) throw std::invalid_argument("extend_clique: Q is not a clique");
  if (kq == k) return q;
  VertexSet cands = common_neighborhood(g, q);
  cands.and_not(q);
  std::vector<int> cur;
  VertexSet result(g.vertex_count());
  if (extend_dfs(g, k, cur, cands, result, q)) return result;
  return std::nullopt;
}

}  // namespace gt
