#include "gt/reduced.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace gt {

namespace {

void check_ordered_clique(const Graph& g, const OrderedClique& q, int k, const char* who) {
  if (static_cast<int>(q.vertices.size()) != k)
    throw std::invalid_argument(std::string(who) + ": expected an ordered " + std::to_string(k) + "-clique");
  for (int v : q.vertices)
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range(std::string(who) + ": vertex out of range");
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices.size(); ++j) {
      if (q.vertices[i] == q.vertices[j])
        throw std::invalid_argument(std::string(who) + ": repeated vertex in tuple");
      if (!g.adjacent(q.vertices[i], q.vertices[j]))
        throw std::invalid_argument(std::string(who) + ": tuple is not a clique");
    }
}

// State of the walk search: the last k-1 vertices. Appending v requires v to
// be adjacent to all of them, so every window of k consecutive vertices is a
// clique.
using WalkState = std::vector<int>;

WalkState shift(const WalkState& s, int v) {
  WalkState t(s.begin() + 1, s.end());
  t.push_back(v);
  return t;
}

bool can_append(const Graph& g, const WalkState& s, int v) {
  for (int u : s) {
    if (u == v || !g.adjacent(u, v)) return false;
  }
  return true;
}

}  // namespace

std::optional<CliqueWalk> clique_walk(const Graph& r, int k, const OrderedClique& q1,
                                      const OrderedClique& q2) {
  if (k < 2) throw std::invalid_argument("clique_walk: need k >= 2");
  check_ordered_clique(r, q1, k, "clique_walk: Q1");
  check_ordered_clique(r, q2, k, "clique_walk: Q2");

  // The walk is Q1 + middle + Q2 with |middle| = t - 2k. Valid lengths are
  // t in [3k, 3k^3] with k | t, i.e. |middle| in [k, 3k^3 - 2k] with
  // k | |middle|. Backward BFS over states tells, for each state, the exact
  // numbers of appends that reach a state from which Q2 can be written.
  const int max_middle = 3 * k * k * k - 2 * k;

  WalkState start(q1.vertices.begin() + 1, q1.vertices.end());
  auto accepts = [&](const WalkState& s) {
    WalkState cur = s;
    for (int v : q2.vertices) {
      if (!can_append(r, cur, v)) return false;
      cur = shift(cur, v);
    }
    return true;
  };

  // Layered reachability forward from the start state.
  std::map<WalkState, int> state_id;
  std::vector<WalkState> states;
  auto intern = [&](const WalkState& s) {
    auto [it, fresh] = state_id.try_emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  int start_id = intern(start);

  std::vector<std::vector<char>> reach;  // reach[m][sid]
  reach.push_back(std::vector<char>(1, 0));
  reach[0].resize(1, 0);
  reach[0][start_id] = 1;

  int found_middle = -1;
  for (int m = 0; m <= max_middle; ++m) {
    reach[m].resize(states.size(), 0);
    if (m >= k && m % k == 0) {
      for (std::size_t sid = 0; sid < reach[m].size(); ++sid) {
        if (reach[m][sid] && accepts(states[sid])) {
          found_middle = m;
          break;
        }
      }
      if (found_middle >= 0) break;
    }
    if (m == max_middle) break;
    std::vector<char> next(states.size(), 0);
    for (std::size_t sid = 0; sid < reach[m].size(); ++sid) {
      if (!reach[m][sid]) continue;
      WalkState s = states[sid];
      for (int v = 0; v < r.vertex_count(); ++v) {
        if (!can_append(r, s, v)) continue;
        int nid = intern(shift(s, v));
        if (static_cast<std::size_t>(nid) >= next.size()) next.resize(states.size(), 0);
        next[nid] = 1;
      }
    }
    next.resize(states.size(), 0);
    reach.push_back(std::move(next));
  }
  if (found_middle < 0) return std::nullopt;

  // Backward feasibility: ok[j][sid] = from sid, j more appends can end in
  // an accepting state. Then a greedy forward pass picks the smallest vertex
  // at each step, which yields the lexicographically smallest sequence.
  std::vector<std::vector<char>> ok(found_middle + 1, std::vector<char>(states.size(), 0));
  for (std::size_t sid = 0; sid < states.size(); ++sid) ok[0][sid] = accepts(states[sid]) ? 1 : 0;
  for (int j = 1; j <= found_middle; ++j) {
    for (std::size_t sid = 0; sid < states.size(); ++sid) {
      const WalkState& s = states[sid];
      for (int v = 0; v < r.vertex_count() && !ok[j][sid]; ++v) {
        if (!can_append(r, s, v)) continue;
        auto it = state_id.find(shift(s, v));
        if (it != state_id.end() && ok[j - 1][it->second]) ok[j][sid] = 1;
      }
    }
  }
  if (!ok[found_middle][start_id]) return std::nullopt;  // unreachable

  std::vector<int> walk = q1.vertices;
  WalkState cur = start;
  for (int j = found_middle; j > 0; --j) {
    for (int v = 0; v < r.vertex_count(); ++v) {
      if (!can_append(r, cur, v)) continue;
      auto it = state_id.find(shift(cur, v));
      if (it == state_id.end() || !ok[j - 1][it->second]) continue;
      walk.push_back(v);
      cur = shift(cur, v);
      break;
    }
  }
  for (int v : q2.vertices) walk.push_back(v);
  return CliqueWalk{std::move(walk), k};
}

namespace {
bool factor_dfs(const Graph& g, int k, VertexSet& covered, std::vector<std::vector<int>>& out) {
  int v = -1;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (!covered.test(u)) {
      v = u;
      break;
    }
  if (v < 0) return true;

  // enumerate k-cliques through v among uncovered vertices, ascending
  std::vector<int> clique{v};
  VertexSet cands = g.neighbors(v);
  cands.and_not(covered);
  auto extend = [&](auto&& self, const VertexSet& cs) -> bool {
    if (static_cast<int>(clique.size()) == k) {
      for (int u : clique) covered.set(u);
      out.push_back(clique);
      if (factor_dfs(g, k, covered, out)) return true;
      out.pop_back();
      for (int u : clique) covered.reset(u);
      return false;
    }
    for (int u = cs.first(); u >= 0; u = cs.next(u)) {
      if (u <= clique.back()) continue;
      clique.push_back(u);
      VertexSet next = cs & g.neighbors(u);
      if (self(self, next)) return true;
      clique.pop_back();
    }
    return false;
  };
  return extend(extend, cands);
}
}  // namespace

std::optional<KFactor> kk_factor(const Graph& r, int k) {
  const int n = r.vertex_count();
  if (k < 1) throw std::invalid_argument("kk_factor: need k >= 1");
  if (n % k != 0)
    throw std::invalid_argument("kk_factor: k = " + std::to_string(k) + " does not divide r = " +
                                std::to_string(n));
  if (n > kFactorSearchCap)
    throw std::invalid_argument("kk_factor: exact search is capped at r <= " +
                                std::to_string(kFactorSearchCap));
  VertexSet covered(n);
  std::vector<std::vector<int>> cliques;
  if (!factor_dfs(r, k, covered, cliques)) return std::nullopt;
  // search order already yields cliques sorted by minimum vertex, ascending inside
  return KFactor{std::move(cliques)};
}

std::optional<KFactor> kk_factor_through(const Graph& r, int k, const OrderedClique& k_clique) {
  const int n = r.vertex_count();
  check_ordered_clique(r, k_clique, k, "kk_factor_through: K");
  if (n % k != 0) throw std::invalid_argument("kk_factor_through: k does not divide r");
  if (n > kFactorSearchCap)
    throw std::invalid_argument("kk_factor_through: exact search is capped at r <= " +
                                std::to_string(kFactorSearchCap));

  std::vector<int> rest;
  VertexSet in_k(n);
  for (int v : k_clique.vertices) in_k.set(v);
  for (int v = 0; v < n; ++v)
    if (!in_k.test(v)) rest.push_back(v);

  Graph sub = r.induced(rest);
  std::optional<KFactor> sub_factor = kk_factor(sub, k);
  if (!sub_factor) return std::nullopt;

  std::vector<int> fixed = k_clique.vertices;
  std::sort(fixed.begin(), fixed.end());
  std::vector<std::vector<int>> cliques{fixed};
  for (const std::vector<int>& c : sub_factor->cliques) {
    std::vector<int> mapped;
    mapped.reserve(c.size());
    for (int v : c) mapped.push_back(rest[v]);
    std::sort(mapped.begin(), mapped.end());
    cliques.push_back(std::move(mapped));
  }
  std::sort(cliques.begin(), cliques.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return KFactor{std::move(cliques)};
}

Matching3Ind three_independent_matching(const Graph& h, const std::vector<std::pair<int, int>>& edges,
                                        int max_degree_bound) {
  if (max_degree(h) > max_degree_bound)
    throw std::invalid_argument("three_independent_matching: max degree exceeds the declared bound");
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v || !h.adjacent(u, v))
      throw std::invalid_argument("three_independent_matching: E is not a subset of E(H)");
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Two edges conflict iff their distance-1 balls intersect, i.e. the edges
  // are at distance <= 2.
  auto ball = [&](std::pair<int, int> e) {
    VertexSet b(h.vertex_count());
    b.set(e.first);
    b.set(e.second);
    b |= h.neighbors(e.first);
    b |= h.neighbors(e.second);
    return b;
  };

  std::vector<std::pair<int, int>> chosen;
  std::vector<VertexSet> chosen_balls;
  for (auto e : sorted) {
    VertexSet b = ball(e);
    bool conflict = false;
    for (const VertexSet& cb : chosen_balls)
      if (cb.intersects(b)) {
        conflict = true;
        break;
      }
    if (!conflict) {
      chosen.push_back(e);
      chosen_balls.push_back(std::move(b));
    }
  }
  return Matching3Ind{std::move(chosen)};
}

}  // namespace gt
