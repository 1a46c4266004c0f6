#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gt/graph.hpp"

namespace gt {

// Ordered k-tuple of distinct, pairwise-adjacent vertices.
struct OrderedClique {
  std::vector<int> vertices;
};

// Walk z_1..z_t whose every k consecutive vertices form a clique, with the
// given ordered cliques as prefix and suffix, 3k <= t <= 3k^3 and k | t.
struct CliqueWalk {
  std::vector<int> walk;
  int k = 0;

  int length() const { return static_cast<int>(walk.size()); }
};

// Partition of V(R) into r/k cliques; cliques sorted by minimum vertex,
// vertices ascending inside each clique.
struct KFactor {
  std::vector<std::vector<int>> cliques;
};

// Matching whose edges are pairwise at graph distance >= 3.
struct Matching3Ind {
  std::vector<std::pair<int, int>> edges;
};

inline constexpr int kFactorSearchCap = 36;

// Shortest valid clique-walk from q1 to q2 with t == 0 (mod k), ties broken
// by the lexicographically smallest vertex sequence. Guaranteed to exist
// when delta(R) >= (1 - 1/k) r + 1; below that, still returns a walk if one
// of length <= 3k^3 exists.
std::optional<CliqueWalk> clique_walk(const Graph& r, int k, const OrderedClique& q1,
                                      const OrderedClique& q2);

// Exact K_k-factor by backtracking over the smallest uncovered vertex;
// guaranteed when delta(R) >= (1 - 1/k) r (Hajnal-Szemeredi bound).
std::optional<KFactor> kk_factor(const Graph& r, int k);

// Factor containing V(K) as one of its cliques; guaranteed when
// delta(R) >= (1 - 1/k) r + k.
std::optional<KFactor> kk_factor_through(const Graph& r, int k, const OrderedClique& k_clique);

// Greedy 3-independent matching inside the edge set `edges`, processed in
// ascending (u, v) order. Size is at least ceil(|E| / (2 Delta^3)) because
// each edge conflicts with at most 2 Delta^3 - 1 others.
Matching3Ind three_independent_matching(const Graph& h, const std::vector<std::pair<int, int>>& edges,
                                        int max_degree_bound);

}  // namespace gt
