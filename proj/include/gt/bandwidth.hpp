#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gt/graph.hpp"

namespace gt {

// order[p] is the vertex placed at position p (0-based internally; the
// block-construction arithmetic below works with 1-based positions to match
// the usual convention). width is the true max |pos(u) - pos(v)| over edges.
struct BandwidthOrdering {
  std::vector<int> order;
  int width = 0;

  std::vector<int> positions() const {  // vertex -> position (0-based)
    std::vector<int> pos(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
    return pos;
  }
};

// color[v] in 1..k, adjacent vertices distinct.
struct ProperColoring {
  std::vector<int> color;
  int k = 0;
};

// Ordered blocks W_1..W_r (blocks[i] is W_{i+1}); r is a multiple of k;
// empty blocks are retained.
struct BandwidthPartition {
  std::vector<VertexSet> blocks;
  int k = 0;
  int window = 0;  // integer block window alpha_n

  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Index ranges [start, end] over block indices, 1-based; each spans at most
// ell blocks and consecutive intervals are separated by at least ell+1.
struct FragmentedIntervals {
  std::vector<std::pair<int, int>> intervals;
  int ell = 0;
  std::optional<int> initial_bound;
};

enum class OrderingMode { exact, heuristic };

inline constexpr int kExactOrderingCap = 20;
inline constexpr int kExactColoringCap = 64;

// exact: branch-and-bound over prefixes with stretch pruning (n <= 20),
// minimum-width ordering. heuristic: BFS level order from a min-degree root
// plus bounded 2-swap hill climbing; valid width, no optimality claim.
BandwidthOrdering compute_ordering(const Graph& h, OrderingMode mode,
                                   std::uint64_t node_budget = 50'000'000, std::uint64_t seed = 0);

int ordering_width(const Graph& h, const std::vector<int>& order);

// Proper k-coloring by exact backtracking (n <= 64); nullopt when chi(H) > k.
std::optional<ProperColoring> proper_coloring(const Graph& h, int k);

// Blockwise refinement of a bandwidth ordering by color classes:
//   W_i = { x_l : (i-k) w + 1 <= l <= i w, c(x_l) == i (mod k) }
// with 1-based positions l and w = window. Requires ord.width <= window.
BandwidthPartition bandwidth_partition(const Graph& h, const BandwidthOrdering& ord,
                                       const ProperColoring& coloring, int window);

struct AdmissionResult {
  bool ok = false;
  std::optional<std::pair<int, int>> violating_edge;
};

// True iff every block is independent and every edge joins blocks at index
// distance <= k-1 (and != 0). Blocks must partition V(H).
AdmissionResult verify_admission(const Graph& h, const BandwidthPartition& partition);

// p intervals of width exactly ell placed greedily left to right with gap
// ell+1. Throws when fewer than p fit (the message carries the maximum
// feasible p).
FragmentedIntervals build_fragmented(const BandwidthPartition& partition, int ell, int p,
                                     std::optional<int> initial_bound = std::nullopt);

}  // namespace gt
