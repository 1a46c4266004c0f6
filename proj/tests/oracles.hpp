#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is written independently of the library's search paths: subset and
// permutation enumeration, literal definitions, no shared pruning logic.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gt/graph.hpp"
#include "gt/rational.hpp"
#include "gt/rng.hpp"

namespace oracle {

// All k-cliques by subset enumeration; n <= 20.
inline std::vector<std::vector<int>> naive_cliques(const gt::Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> items;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) items.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < items.size() && clique; ++i)
      for (std::size_t j = i + 1; j < items.size() && clique; ++j)
        if (!g.adjacent(items[i], items[j])) clique = false;
    if (clique) out.push_back(items);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum bandwidth over all n! orderings; n <= 8.
inline int min_bandwidth_brute(const gt::Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    int width = 0;
    for (auto [u, v] : g.edges()) width = std::max(width, std::abs(pos[u] - pos[v]));
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Single-source BFS distances; -1 when unreachable.
inline std::vector<int> bfs_distances(const gt::Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

// Literal 3-independence: every two matching edges at graph distance >= 3.
inline bool is_3_independent(const gt::Graph& g, const std::vector<std::pair<int, int>>& matching) {
  for (std::size_t i = 0; i < matching.size(); ++i) {
    std::vector<int> da = bfs_distances(g, matching[i].first);
    std::vector<int> db = bfs_distances(g, matching[i].second);
    for (std::size_t j = 0; j < matching.size(); ++j) {
      if (i == j) continue;
      for (int endpoint : {matching[j].first, matching[j].second}) {
        int d = std::min(da[endpoint] < 0 ? INT_MAX : da[endpoint],
                         db[endpoint] < 0 ? INT_MAX : db[endpoint]);
        if (d < 3) return false;
      }
    }
  }
  return true;
}

// Literal clique-walk conditions, exception set included: for i != j with
// |i-j| <= k-1, adjacency is required unless {i,j} is inside the union of
// the two endpoint windows.
inline bool check_clique_walk(const gt::Graph& r, int k, const std::vector<int>& q1,
                              const std::vector<int>& q2, const std::vector<int>& walk) {
  const int t = static_cast<int>(walk.size());
  if (t < 3 * k || t > 3 * k * k * k || t % k != 0) return false;
  for (int i = 0; i < k; ++i) {
    if (walk[i] != q1[i]) return false;
    if (walk[t - k + i] != q2[i]) return false;
  }
  auto in_exception = [&](int i) { return i < k || i >= t - k; };  // 0-based windows
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t && j - i <= k - 1; ++j) {
      if (in_exception(i) && in_exception(j)) continue;
      if (walk[i] == walk[j] || !r.adjacent(walk[i], walk[j])) return false;
    }
  return true;
}

// Is there any walk of the clique-walk kind at all, by BFS over suffix
// states up to the length cap? Used to validate not-found answers.
inline bool clique_walk_exists_brute(const gt::Graph& r, int k, const std::vector<int>& q1,
                                     const std::vector<int>& q2) {
  const int cap = 3 * k * k * k;
  std::set<std::pair<std::vector<int>, int>> seen;
  std::vector<std::pair<std::vector<int>, int>> queue;
  std::vector<int> start(q1.begin() + 1, q1.end());
  queue.push_back({start, k});
  seen.insert({start, k % k});
  auto try_finish = [&](const std::vector<int>& state, int len) {
    if (len + k < 3 * k || len + k > cap || (len + k) % k != 0) return false;
    std::vector<int> cur = state;
    for (int x : q2) {
      for (int u : cur)
        if (u == x || !r.adjacent(u, x)) return false;
      cur.erase(cur.begin());
      cur.push_back(x);
    }
    return true;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [state, len] = queue[head];
    if (try_finish(state, len)) return true;
    if (len + k >= cap) continue;
    for (int v = 0; v < r.vertex_count(); ++v) {
      bool ok = true;
      for (int u : state)
        if (u == v || !r.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<int> next(state.begin() + 1, state.end());
      next.push_back(v);
      if (seen.insert({next, (len + 1) % k}).second) queue.push_back({next, len + 1});
    }
  }
  return false;
}

// Exhaustive transversal oracle: all injective phi times all bijections
// lambda, literally. n and h tiny.
inline bool transversal_exists_brute(const gt::GraphCollection& coll, const gt::Graph& h) {
  const int n = coll.vertex_count();
  const int nh = h.vertex_count();
  if (nh > n) return false;
  auto h_edges = h.edges();
  const int m = static_cast<int>(h_edges.size());
  if (m > coll.color_count()) return false;

  std::vector<int> hosts(n);
  std::iota(hosts.begin(), hosts.end(), 0);
  std::vector<int> pick(nh);

  std::vector<int> colors(coll.color_count());
  std::iota(colors.begin(), colors.end(), 0);

  // enumerate injective phi as (subset of size nh) x permutations
  std::vector<int> idx(nh);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> chosen(n, 0);
  auto choose = [&](auto&& self, int from, int depth) -> bool {
    if (depth == nh) {
      std::vector<int> subset;
      for (int v = 0; v < n; ++v)
        if (chosen[v]) subset.push_back(v);
      std::sort(subset.begin(), subset.end());
      do {
        // try all color injections for this phi
        std::vector<int> cperm = colors;
        std::sort(cperm.begin(), cperm.end());
        do {
          bool ok = true;
          for (int e = 0; e < m && ok; ++e) {
            auto [x, y] = h_edges[e];
            if (!coll.layer(cperm[e]).adjacent(subset[x], subset[y])) ok = false;
          }
          if (ok) return true;
        } while (std::next_permutation(cperm.begin(), cperm.end()));
      } while (std::next_permutation(subset.begin(), subset.end()));
      return false;
    }
    for (int v = from; v < n; ++v) {
      if (chosen[v]) continue;
      chosen[v] = 1;
      if (self(self, v + 1, depth + 1)) return true;
      chosen[v] = 0;
    }
    return false;
  };
  return choose(choose, 0, 0);
}

// Fully exhaustive regularity check over all subset pairs (both sides),
// cross-checking the extremal-subset scan; sides <= 10.
inline bool regular_exhaustive_brute(const gt::Graph& g, const std::vector<int>& a,
                                     const std::vector<int>& b, const gt::Rational& eps,
                                     const gt::Rational& d) {
  const int as = static_cast<int>(a.size()), bs = static_cast<int>(b.size());
  for (std::uint32_t ma = 1; ma < (1u << as); ++ma) {
    if (gt::Rational(std::popcount(ma), as) < eps) continue;
    for (std::uint32_t mb = 1; mb < (1u << bs); ++mb) {
      if (gt::Rational(std::popcount(mb), bs) < eps) continue;
      long long e = 0;
      for (int i = 0; i < as; ++i)
        if (ma & (1u << i))
          for (int j = 0; j < bs; ++j)
            if ((mb & (1u << j)) && g.adjacent(a[i], b[j])) ++e;
      gt::Rational density(e, static_cast<long long>(std::popcount(ma)) * std::popcount(mb));
      gt::Rational diff = density - d;
      if (diff.is_negative()) diff = -diff;
      if (diff > eps) return false;
    }
  }
  return true;
}

// Seeded random graph for tests.
inline gt::Graph random_graph(int n, const gt::Rational& p, std::uint64_t seed) {
  gt::Rng rng(seed);
  gt::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return b.build();
}

// Random graph conditioned on min degree >= target by edge repair.
inline gt::Graph random_graph_min_degree(int n, int target, const gt::Rational& p,
                                         std::uint64_t seed) {
  gt::Rng rng(seed);
  gt::GraphBuilder b(random_graph(n, p, seed * 2 + 1));
  while (true) {
    int worst = -1;
    for (int v = 0; v < n; ++v)
      if (b.degree(v) < target && (worst < 0 || b.degree(v) < b.degree(worst))) worst = v;
    if (worst < 0) break;
    std::vector<int> cands;
    for (int u = 0; u < n; ++u)
      if (u != worst && !b.has_edge(worst, u)) cands.push_back(u);
    b.add_edge(worst, cands[rng.below(cands.size())]);
  }
  return b.build();
}

}  // namespace oracle
