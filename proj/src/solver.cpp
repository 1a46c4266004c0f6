#include "gt/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gt/bandwidth.hpp"
#include "gt/fraction.hpp"
#include "gt/matching.hpp"
#include "gt/rng.hpp"

namespace gt {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::found:
      return "found";
    case Outcome::not_found:
      return "not-found";
    default:
      return "budget-exhausted";
  }
}

std::string TransversalEmbedding::to_text() const {
  std::ostringstream out;
  out << "phi:";
  for (std::size_t x = 0; x < phi.size(); ++x) out << " " << x << "->" << phi[x];
  out << "\nlambda:";
  for (std::size_t e = 0; e < h_edges.size(); ++e)
    out << " " << h_edges[e].first << "-" << h_edges[e].second << "->" << lambda[e];
  out << "\n";
  return out.str();
}

namespace {

// Backtracking isomorphism search used only for symmetry breaking: does some
// automorphism of g map `from` to `to`? Conservative on budget exhaustion
// (returns false, which merely splits an orbit and weakens the pruning).
bool automorphism_maps(const Graph& g, int from, int to, std::uint64_t budget = 200'000) {
  const int n = g.vertex_count();
  std::vector<int> image(n, -1), used(n, 0);
  image[from] = to;
  used[to] = 1;
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, int next) -> bool {
    while (next == from) ++next;
    if (next >= n) return true;
    if (++nodes > budget) return false;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || g.degree(cand) != g.degree(next)) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (image[u] < 0) continue;
        if (g.adjacent(next, u) != g.adjacent(cand, image[u])) ok = false;
      }
      if (!ok) continue;
      image[next] = cand;
      used[cand] = 1;
      int after = next + 1;
      if (self(self, after)) return true;
      image[next] = -1;
      used[cand] = 0;
    }
    return false;
  };
  int first = (from == 0) ? 1 : 0;
  return dfs(dfs, first);
}

// Orbit representatives of Aut(G) acting on vertices; vertex v is a
// representative iff no smaller vertex is in its orbit.
std::vector<int> orbit_representatives(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> rep;
  std::vector<char> covered(n, 0);
  for (int v = 0; v < n; ++v) {
    if (covered[v]) continue;
    rep.push_back(v);
    for (int u = v + 1; u < n; ++u)
      if (!covered[u] && g.degree(u) == g.degree(v) && automorphism_maps(g, v, u)) covered[u] = 1;
  }
  return rep;
}

struct Search {
  const GraphCollection& coll;
  const Graph& h;
  const SearchConfig& cfg;
  const Graph& host_union;
  int n_host;
  int n_h;

  std::vector<int> order;                 // H-vertices in placement order
  std::vector<int> order_pos;             // H-vertex -> position
  std::vector<std::vector<int>> closing;  // per position: earlier H-neighbors (ascending)
  std::vector<int> candidate_perm;        // seeded iteration order over host vertices

  std::vector<int> phi;
  VertexSet used;
  IncrementalMatcher matcher;
  std::vector<std::pair<int, int>> closed_edges;  // in matcher push order

  SearchStats stats;
  std::chrono::steady_clock::time_point t0;
  const std::atomic<bool>* cancel;
  bool exhausted = false;
  bool cancelled = false;
  std::optional<std::vector<int>> first_candidates;  // symmetry-broken candidates for position 0

  Search(const GraphCollection& c, const Graph& target, const SearchConfig& config,
         const std::atomic<bool>* cancel_flag)
      : coll(c),
        h(target),
        cfg(config),
        host_union(c.union_graph()),
        n_host(c.vertex_count()),
        n_h(target.vertex_count()),
        phi(target.vertex_count(), -1),
        used(c.vertex_count()),
        matcher(c.color_count()),
        cancel(cancel_flag) {}

  void prepare() {
    switch (cfg.vertex_order) {
      case VertexOrderPolicy::bandwidth: {
        BandwidthOrdering ord = compute_ordering(
            h, n_h <= kExactOrderingCap ? OrderingMode::exact : OrderingMode::heuristic);
        order = ord.order;
        break;
      }
      case VertexOrderPolicy::degree: {
        order.resize(n_h);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        break;
      }
      case VertexOrderPolicy::given: {
        if (static_cast<int>(cfg.given_order.size()) != n_h)
          throw std::invalid_argument("find_transversal: given order has wrong length");
        order = cfg.given_order;
        std::vector<char> seen(n_h, 0);
        for (int v : order) {
          if (v < 0 || v >= n_h || seen[v])
            throw std::invalid_argument("find_transversal: given order is not a permutation");
          seen[v] = 1;
        }
        break;
      }
    }
    order_pos.assign(n_h, -1);
    for (int p = 0; p < n_h; ++p) order_pos[order[p]] = p;
    closing.assign(n_h, {});
    for (int p = 0; p < n_h; ++p) {
      int x = order[p];
      for (int y = h.neighbors(x).first(); y >= 0; y = h.neighbors(x).next(y))
        if (order_pos[y] < p) closing[p].push_back(y);
      std::sort(closing[p].begin(), closing[p].end());
    }

    candidate_perm.resize(n_host);
    std::iota(candidate_perm.begin(), candidate_perm.end(), 0);
    if (cfg.seed != 0) {
      Rng rng(cfg.seed);
      rng.shuffle(candidate_perm);
    }

    // Symmetry breaking: with identical layers, any host automorphism maps
    // transversals to transversals, so the first image can be pinned to one
    // representative per orbit. Disabled when layers differ.
    bool identical = true;
    for (int c = 1; c < coll.color_count() && identical; ++c)
      if (!(coll.layer(c) == coll.layer(0))) identical = false;
    if (identical && n_host <= 12 && n_h > 0) first_candidates = orbit_representatives(coll.layer(0));
  }

  bool out_of_budget() {
    if (stats.nodes >= cfg.node_budget) return true;
    if ((stats.nodes & 1023) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      if (ms > cfg.time_budget_ms) return true;
      if (cancel && cancel->load(std::memory_order_relaxed)) {
        cancelled = true;
        return true;
      }
    }
    return false;
  }

  // Forward check: an unplaced H-vertex adjacent to x whose remaining image
  // pool is empty kills the subtree.
  bool codegree_prune(int x) {
    for (int z = h.neighbors(x).first(); z >= 0; z = h.neighbors(x).next(z)) {
      if (phi[z] >= 0) continue;
      VertexSet pool = VertexSet::full(n_host);
      pool.and_not(used);
      for (int y = h.neighbors(z).first(); y >= 0; y = h.neighbors(z).next(y)) {
        if (phi[y] < 0) continue;
        pool &= host_union.neighbors(phi[y]);
      }
      if (pool.none()) return true;
    }
    return false;
  }

  void recompute_matching_check() {
    ++stats.matching_recomputes;
    std::vector<Bitset> nbrs;
    nbrs.reserve(closed_edges.size());
    for (auto [hu, hv] : closed_edges) nbrs.push_back(color_availability(coll, phi[hu], phi[hv]));
    std::vector<int> match = max_bipartite_matching(nbrs, coll.color_count());
    for (int m : match)
      if (m < 0) throw std::logic_error("incremental matching disagrees with recomputation");
  }

  bool place(int p) {
    if (p == n_h) return true;
    const int x = order[p];
    for (int ci = 0; ci < n_host; ++ci) {
      const int v = (p == 0 && first_candidates) ? (ci < static_cast<int>(first_candidates->size())
                                                        ? (*first_candidates)[ci]
                                                        : -1)
                                                 : candidate_perm[ci];
      if (v < 0) break;
      if (used.test(v)) continue;
      ++stats.nodes;
      if (out_of_budget()) {
        exhausted = !cancelled;
        return false;
      }

      // every newly closed H-edge must exist in at least one layer
      int pushed = 0;
      bool ok = true;
      for (int y : closing[p]) {
        ColorSet avail = color_availability(coll, v, phi[y]);
        if (avail.none()) {
          ok = false;
          break;
        }
        if (!matcher.push(avail)) {  // Hall pruning
          ++stats.hall_prunes;
          ok = false;
          break;
        }
        closed_edges.emplace_back(std::min(x, y), std::max(x, y));
        ++pushed;
      }
      if (ok) {
        phi[x] = v;
        used.set(v);
        if (cfg.recompute_matching_check && cfg.prune_level != PruneLevel::none)
          recompute_matching_check();
        bool pruned = cfg.prune_level == PruneLevel::hall_codegree && codegree_prune(x);
        if (!pruned && place(p + 1)) return true;
        used.reset(v);
        phi[x] = -1;
      }
      for (int i = 0; i < pushed; ++i) {
        matcher.pop();
        closed_edges.pop_back();
      }
      if (exhausted || cancelled) return false;
    }
    return false;
  }

  SolveResult run() {
    t0 = std::chrono::steady_clock::now();
    prepare();

    SolveResult result;
    bool found = cfg.prune_level == PruneLevel::none ? place_unpruned(0) : place(0);
    result.stats = stats;
    result.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
    if (found) {
      result.outcome = Outcome::found;
      result.embedding = extract_embedding();
    } else if (exhausted) {
      result.outcome = Outcome::budget_exhausted;
    } else {
      result.outcome = Outcome::not_found;
    }
    return result;
  }

  // Reference search without Hall pruning: colors are only assigned at the
  // leaves. Exists to spot-check that pruned subtrees hold no solution.
  bool place_unpruned(int p) {
    if (p == n_h) {
      std::vector<Bitset> nbrs;
      for (auto [u, v] : h.edges()) nbrs.push_back(color_availability(coll, phi[u], phi[v]));
      std::vector<int> match = max_bipartite_matching(nbrs, coll.color_count());
      for (int m : match)
        if (m < 0) return false;
      return true;
    }
    const int x = order[p];
    for (int ci = 0; ci < n_host; ++ci) {
      const int v = candidate_perm[ci];
      if (used.test(v)) continue;
      ++stats.nodes;
      if (out_of_budget()) {
        exhausted = !cancelled;
        return false;
      }
      bool ok = true;
      for (int y : closing[p])
        if (!host_union.adjacent(v, phi[y])) {
          ok = false;
          break;
        }
      if (ok) {
        phi[x] = v;
        used.set(v);
        if (place_unpruned(p + 1)) return true;
        used.reset(v);
        phi[x] = -1;
      }
      if (exhausted || cancelled) return false;
    }
    return false;
  }

  TransversalEmbedding extract_embedding() {
    TransversalEmbedding emb;
    emb.phi = phi;
    emb.h_edges = h.edges();
    emb.partial = static_cast<int>(emb.h_edges.size()) < coll.color_count();
    emb.lambda.resize(emb.h_edges.size(), -1);
    if (cfg.prune_level == PruneLevel::none) {
      std::vector<Bitset> nbrs;
      for (auto [u, v] : emb.h_edges) nbrs.push_back(color_availability(coll, phi[u], phi[v]));
      emb.lambda = max_bipartite_matching(nbrs, coll.color_count());
    } else {
      for (std::size_t i = 0; i < closed_edges.size(); ++i) {
        auto it = std::find(emb.h_edges.begin(), emb.h_edges.end(), closed_edges[i]);
        emb.lambda[it - emb.h_edges.begin()] = matcher.matched_right(static_cast<int>(i));
      }
    }
    return emb;
  }
};

}  // namespace

static SolveResult find_transversal_impl(const GraphCollection& coll, const Graph& h,
                                         const SearchConfig& cfg, const std::atomic<bool>* cancel) {
  if (h.edge_count() > coll.color_count())
    throw std::invalid_argument("find_transversal: H has more edges than there are colors");
  if (h.vertex_count() > coll.vertex_count())
    throw std::invalid_argument("find_transversal: H has more vertices than the host");
  if (cfg.node_budget == 0 || cfg.time_budget_ms <= 0)
    throw std::invalid_argument("find_transversal: budgets must be positive");

  Search search(coll, h, cfg, cancel);
  SolveResult result = search.run();
  if (result.outcome == Outcome::found) {
    VerifyResult check = verify_transversal(coll, h, *result.embedding);
    if (!check.ok) throw std::logic_error("find_transversal: produced embedding fails validation: " +
                                          check.violation);
  }
  return result;
}

SolveResult find_transversal(const GraphCollection& coll, const Graph& h, const SearchConfig& cfg) {
  return find_transversal_impl(coll, h, cfg, nullptr);
}

SolveResult find_transversal_portfolio(const GraphCollection& coll, const Graph& h,
                                       const SearchConfig& cfg, int workers) {
  if (workers < 1) throw std::invalid_argument("find_transversal_portfolio: need workers >= 1");
  if (workers == 1) return find_transversal(coll, h, cfg);

  std::vector<SolveResult> results(workers);
  std::atomic<int> best_success{workers};
  std::vector<std::atomic<bool>> cancels(workers);
  for (auto& c : cancels) c.store(false);

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::min(workers, omp_get_max_threads()))
  for (int w = 0; w < workers; ++w) {
    if (best_success.load() < w) {
      cancels[w].store(true);  // a lower seed already succeeded; result cannot win
    }
    SearchConfig local = cfg;
    local.seed = cfg.seed + static_cast<std::uint64_t>(w);
    results[w] = find_transversal_impl(coll, h, local, &cancels[w]);
    if (results[w].outcome == Outcome::found) {
      int cur = best_success.load();
      while (w < cur && !best_success.compare_exchange_weak(cur, w)) {
      }
      for (int other = w + 1; other < workers; ++other) cancels[other].store(true);
    }
  }

  int winner = best_success.load();
  if (winner < workers) return results[winner];
  // no success: all workers ran to completion
  bool any_exhausted = false;
  for (int w = 0; w < workers; ++w)
    if (results[w].outcome == Outcome::budget_exhausted) any_exhausted = true;
  SolveResult agg = results[0];
  agg.outcome = any_exhausted ? Outcome::budget_exhausted : Outcome::not_found;
  agg.embedding.reset();
  return agg;
}

VerifyResult verify_transversal(const GraphCollection& coll, const Graph& h,
                                const TransversalEmbedding& emb) {
  const int n_h = h.vertex_count();
  if (static_cast<int>(emb.phi.size()) != n_h) return {false, "phi has wrong length"};

  // phi injective into the host vertex set
  std::vector<char> hit(coll.vertex_count(), 0);
  for (int x = 0; x < n_h; ++x) {
    int v = emb.phi[x];
    if (v < 0 || v >= coll.vertex_count()) return {false, "phi(" + std::to_string(x) + ") out of range"};
    if (hit[v]) return {false, "phi repeats host vertex " + std::to_string(v)};
    hit[v] = 1;
  }

  // edge list matches E(H) and lambda is injective (bijective when e(H) = h)
  auto h_edges = h.edges();
  if (emb.h_edges != h_edges) return {false, "edge list does not match E(H)"};
  if (emb.lambda.size() != h_edges.size()) return {false, "lambda has wrong length"};
  std::vector<char> color_used(coll.color_count(), 0);
  for (std::size_t i = 0; i < emb.lambda.size(); ++i) {
    int c = emb.lambda[i];
    if (c < 0 || c >= coll.color_count())
      return {false, "lambda assigns an out-of-range color to edge " + std::to_string(i)};
    if (color_used[c]) return {false, "color collision on color " + std::to_string(c)};
    color_used[c] = 1;
  }
  if (!emb.partial && static_cast<int>(h_edges.size()) != coll.color_count())
    return {false, "embedding not flagged partial but e(H) != h"};

  // every H-edge lands in its assigned layer
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    auto [x, y] = h_edges[i];
    if (!coll.layer(emb.lambda[i]).adjacent(emb.phi[x], emb.phi[y]))
      return {false, "edge " + std::to_string(x) + "-" + std::to_string(y) + " missing from layer " +
                         std::to_string(emb.lambda[i])};
  }
  return {true, ""};
}

RainbowResult find_rainbow_coloring(const GraphCollection& coll,
                                    const std::vector<std::pair<int, int>>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto a = std::minmax(edges[i].first, edges[i].second);
      auto b = std::minmax(edges[j].first, edges[j].second);
      if (a == b) throw std::invalid_argument("find_rainbow_coloring: duplicate edge");
    }

  std::vector<Bitset> avail;
  avail.reserve(edges.size());
  for (auto [u, v] : edges) avail.push_back(color_availability(coll, u, v));

  RainbowResult result;
  auto viol = hall_violation(avail, coll.color_count());
  if (viol) {
    result.ok = false;
    result.deficient_edges = viol->left_items;
    result.deficient_colors = viol->neighborhood;
    return result;
  }
  result.ok = true;
  result.colors = max_bipartite_matching(avail, coll.color_count());
  return result;
}

}  // namespace gt
