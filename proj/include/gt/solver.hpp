#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gt/graph.hpp"

namespace gt {

enum class VertexOrderPolicy { bandwidth, degree, given };
enum class PruneLevel { none, hall, hall_codegree };  // `none` exists for differential testing

struct SearchConfig {
  VertexOrderPolicy vertex_order = VertexOrderPolicy::bandwidth;
  std::vector<int> given_order;  // consulted only for VertexOrderPolicy::given
  std::uint64_t node_budget = 10'000'000;
  std::int64_t time_budget_ms = 600'000;
  std::uint64_t seed = 0;  // permutes candidate image order; 0 = ascending
  PruneLevel prune_level = PruneLevel::hall_codegree;
  bool recompute_matching_check = false;  // debug: cross-check incremental matching from scratch
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t hall_prunes = 0;
  std::uint64_t matching_recomputes = 0;
  std::int64_t elapsed_ms = 0;
};

enum class Outcome { found, not_found, budget_exhausted };

std::string outcome_str(Outcome o);

// phi maps V(H) into the host vertex set; lambda assigns h_edges[i] the
// color lambda[i]. When e(H) < h the assignment is injective rather than
// bijective and `partial` is set.
struct TransversalEmbedding {
  std::vector<int> phi;
  std::vector<std::pair<int, int>> h_edges;  // ascending (u, v)
  std::vector<int> lambda;
  bool partial = false;

  std::string to_text() const;
};

struct SolveResult {
  Outcome outcome = Outcome::not_found;
  std::optional<TransversalEmbedding> embedding;
  SearchStats stats;
};

// Backtracking over a bandwidth ordering of H with availability filtering
// and Hall pruning: a maximum matching between closed H-edges and colors is
// maintained incrementally (one augmenting path per closed edge, rolled back
// on backtrack); a node whose matching is not left-perfect cannot complete.
// budget_exhausted is a distinct inconclusive outcome, never reported as
// not_found.
SolveResult find_transversal(const GraphCollection& coll, const Graph& h, const SearchConfig& cfg = {});

// Portfolio of searches with seeds cfg.seed .. cfg.seed + workers - 1 racing
// in parallel. The reported embedding is deterministic: the success with the
// lowest seed wins regardless of finish order.
SolveResult find_transversal_portfolio(const GraphCollection& coll, const Graph& h,
                                       const SearchConfig& cfg, int workers);

struct VerifyResult {
  bool ok = false;
  std::string violation;
};

// Independent re-validation of the three embedding invariants; shares no
// code with the solver.
VerifyResult verify_transversal(const GraphCollection& coll, const Graph& h,
                                const TransversalEmbedding& emb);

struct RainbowResult {
  bool ok = false;
  std::vector<int> colors;             // per input edge, when ok
  std::vector<int> deficient_edges;    // Hall certificate: indices into the input
  ColorSet deficient_colors{};         // union availability of the deficient set
};

// Injective edge -> color assignment by maximum bipartite matching; on
// failure returns a deficient edge subset whose availability union is
// smaller than the subset.
RainbowResult find_rainbow_coloring(const GraphCollection& coll,
                                    const std::vector<std::pair<int, int>>& edges);

}  // namespace gt
