#include "gt/bandwidth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gt/rng.hpp"

namespace gt {

int ordering_width(const Graph& h, const std::vector<int>& order) {
  std::vector<int> pos(h.vertex_count());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
  int width = 0;
  for (auto [u, v] : h.edges()) width = std::max(width, std::abs(pos[u] - pos[v]));
  return width;
}

namespace {

struct ExactSearch {
  const Graph& g;
  int n;
  int bound;  // feasibility question: exists ordering with width <= bound?
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> prefix;
  std::vector<int> pos;  // -1 while unplaced
  std::vector<int> result;

  ExactSearch(const Graph& graph, std::uint64_t node_budget)
      : g(graph), n(graph.vertex_count()), bound(0), budget(node_budget), pos(n, -1) {}

  bool feasible(int b) {
    bound = b;
    prefix.clear();
    std::fill(pos.begin(), pos.end(), -1);
    return place(0);
  }

  bool place(int p) {
    if (++nodes > budget) throw std::runtime_error("compute_ordering: node budget exhausted");
    if (p == n) {
      result = prefix;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      bool ok = true;
      // every placed neighbor must be within `bound` positions
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
        if (pos[u] >= 0 && p - pos[u] > bound) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // a placed vertex whose unplaced neighbors can no longer fit kills
        // the whole prefix, not just this candidate
        for (int q = std::max(0, p - bound); q < p && ok; ++q) {
          int u = prefix[q];
          if (q + bound == p) {
            for (int w = g.neighbors(u).first(); w >= 0; w = g.neighbors(u).next(w))
              if (pos[w] < 0 && w != v) {
                ok = false;
                break;
              }
          }
        }
      }
      if (!ok) continue;
      pos[v] = p;
      prefix.push_back(v);
      if (place(p + 1)) return true;
      prefix.pop_back();
      pos[v] = -1;
    }
    return false;
  }
};

BandwidthOrdering exact_ordering(const Graph& h, std::uint64_t node_budget) {
  const int n = h.vertex_count();
  if (n > kExactOrderingCap)
    throw std::invalid_argument("compute_ordering: exact mode is capped at n <= " +
                                std::to_string(kExactOrderingCap) + "; use heuristic mode");
  if (n == 0) throw std::invalid_argument("compute_ordering: empty graph");
  int lower = 0;
  for (int v = 0; v < n; ++v) lower = std::max(lower, (h.degree(v) + 1) / 2);
  ExactSearch search(h, node_budget);
  for (int b = lower; b < n; ++b) {
    if (search.feasible(b)) return BandwidthOrdering{search.result, ordering_width(h, search.result)};
  }
  throw std::logic_error("compute_ordering: no ordering found");  // b = n-1 is always feasible
}

BandwidthOrdering heuristic_ordering(const Graph& h, std::uint64_t seed) {
  const int n = h.vertex_count();
  if (n == 0) throw std::invalid_argument("compute_ordering: empty graph");
  Rng rng(hash_mix(seed, 0x9d2c5680ULL));

  // BFS levels from a min-degree root, components in ascending root order.
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (root < 0 || h.degree(v) < h.degree(root))) root = v;
    std::vector<int> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      order.push_back(u);
      std::vector<int> nbrs;
      for (int w = h.neighbors(u).first(); w >= 0; w = h.neighbors(u).next(w))
        if (!seen[w]) nbrs.push_back(w);
      std::sort(nbrs.begin(), nbrs.end(),
                [&](int a, int b) { return h.degree(a) != h.degree(b) ? h.degree(a) < h.degree(b) : a < b; });
      for (int w : nbrs) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }

  // Bounded 2-swap hill climbing on the width.
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  auto width_at = [&](int v) {
    int w = 0;
    for (int u = h.neighbors(v).first(); u >= 0; u = h.neighbors(v).next(u))
      w = std::max(w, std::abs(pos[v] - pos[u]));
    return w;
  };
  int width = ordering_width(h, order);
  const int max_passes = 40;
  for (int pass = 0; pass < max_passes && width > 0; ++pass) {
    bool improved = false;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    for (int i : idx) {
      for (int j = 0; j < n; ++j) {
        int a = order[i], b = order[j];
        if (a == b) continue;
        int before = std::max(width_at(a), width_at(b));
        std::swap(pos[a], pos[b]);
        int after = std::max(width_at(a), width_at(b));
        if (after < before) {
          std::swap(order[i], order[j]);
          improved = true;
        } else {
          std::swap(pos[a], pos[b]);
        }
      }
    }
    int new_width = ordering_width(h, order);
    if (new_width >= width && !improved) break;
    width = new_width;
  }
  return BandwidthOrdering{order, ordering_width(h, order)};
}

}  // namespace

BandwidthOrdering compute_ordering(const Graph& h, OrderingMode mode, std::uint64_t node_budget,
                                   std::uint64_t seed) {
  return mode == OrderingMode::exact ? exact_ordering(h, node_budget) : heuristic_ordering(h, seed);
}

namespace {
bool color_dfs(const Graph& h, int k, std::vector<int>& color, int v) {
  const int n = h.vertex_count();
  if (v == n) return true;
  for (int c = 1; c <= k; ++c) {
    bool ok = true;
    for (int u = h.neighbors(v).first(); u >= 0 && ok; u = h.neighbors(v).next(u))
      if (u < v && color[u] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (color_dfs(h, k, color, v + 1)) return true;
    color[v] = 0;
  }
  return false;
}
}  // namespace

std::optional<ProperColoring> proper_coloring(const Graph& h, int k) {
  if (k < 1) throw std::invalid_argument("proper_coloring: need k >= 1");
  if (h.vertex_count() > kExactColoringCap)
    throw std::invalid_argument("proper_coloring: exact search is capped at n <= " +
                                std::to_string(kExactColoringCap));
  std::vector<int> color(h.vertex_count(), 0);
  if (!color_dfs(h, k, color, 0)) return std::nullopt;
  return ProperColoring{std::move(color), k};
}

BandwidthPartition bandwidth_partition(const Graph& h, const BandwidthOrdering& ord,
                                       const ProperColoring& coloring, int window) {
  const int n = h.vertex_count();
  if (static_cast<int>(ord.order.size()) != n || static_cast<int>(coloring.color.size()) != n)
    throw std::invalid_argument("bandwidth_partition: size mismatch");
  if (window < 1) throw std::invalid_argument("bandwidth_partition: need window >= 1");
  if (ord.width > window)
    throw std::invalid_argument("bandwidth_partition: ordering width " + std::to_string(ord.width) +
                                " exceeds window " + std::to_string(window));
  const int k = coloring.k;
  for (auto [u, v] : h.edges())
    if (coloring.color[u] == coloring.color[v])
      throw std::invalid_argument("bandwidth_partition: coloring is not proper");

  // Position l (1-based) lands in the window of k consecutive block indices
  // {m+1, .., m+k} with m = floor((l-1)/window); the color residue picks the
  // unique one with i == c(x_l) (mod k).
  std::vector<int> block_of(n);
  int max_block = 1;
  for (int l = 1; l <= n; ++l) {
    int vertex = ord.order[l - 1];
    int m = (l - 1) / window;
    int c = coloring.color[vertex] % k;  // residue class of c in 0..k-1
    int i = m + 1;
    while (i % k != c) ++i;
    if (i < m + 1 || i > m + k) throw std::logic_error("bandwidth_partition: residue out of window");
    block_of[vertex] = i;
    max_block = std::max(max_block, i);
  }
  int r = ((max_block + k - 1) / k) * k;
  std::vector<VertexSet> blocks(r, VertexSet(n));
  for (int v = 0; v < n; ++v) blocks[block_of[v] - 1].set(v);

  BandwidthPartition out{std::move(blocks), k, window};
  AdmissionResult check = verify_admission(h, out);
  if (!check.ok) throw std::logic_error("bandwidth_partition: constructed partition fails admission");
  for (const VertexSet& w : out.blocks)
    if (w.count() > k * window) throw std::logic_error("bandwidth_partition: block size bound violated");
  return out;
}

AdmissionResult verify_admission(const Graph& h, const BandwidthPartition& partition) {
  const int n = h.vertex_count();
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < partition.block_count(); ++i) {
    for (int v = partition.blocks[i].first(); v >= 0; v = partition.blocks[i].next(v)) {
      if (v >= n || block_of[v] >= 0)
        throw std::invalid_argument("verify_admission: blocks are not a partition of V(H)");
      block_of[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] < 0) throw std::invalid_argument("verify_admission: blocks are not a partition of V(H)");

  for (auto [u, v] : h.edges()) {
    int d = std::abs(block_of[u] - block_of[v]);
    if (d == 0 || d > partition.k - 1) return AdmissionResult{false, std::make_pair(u, v)};
  }
  return AdmissionResult{true, std::nullopt};
}

FragmentedIntervals build_fragmented(const BandwidthPartition& partition, int ell, int p,
                                     std::optional<int> initial_bound) {
  if (ell < 1 || p < 1) throw std::invalid_argument("build_fragmented: need ell >= 1 and p >= 1");
  const int r = partition.block_count();
  int limit = initial_bound ? std::min(*initial_bound, r) : r;
  if (initial_bound && *initial_bound < 1) throw std::invalid_argument("build_fragmented: bad initial bound");

  std::vector<std::pair<int, int>> intervals;
  int start = 1;
  while (static_cast<int>(intervals.size()) < p) {
    int end = start + ell - 1;
    if (end > limit) break;
    intervals.emplace_back(start, end);
    start = end + ell + 1;  // next start leaves a gap of ell+1 blocks
  }
  if (static_cast<int>(intervals.size()) < p)
    throw std::invalid_argument("build_fragmented: insufficient room, maximum feasible p is " +
                                std::to_string(intervals.size()));
  return FragmentedIntervals{std::move(intervals), ell, initial_bound};
}

}  // namespace gt
