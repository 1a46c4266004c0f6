#include "gt/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gt/rng.hpp"

namespace gt {

namespace {

Graph random_graph(int n, const Rational& p, Rng& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return b.build();
}

// ceil(delta * n) as exact integer arithmetic
int degree_target(const Rational& delta, int n) {
  long long num = delta.num() * n;
  return static_cast<int>((num + delta.den() - 1) / delta.den());
}

Graph min_degree_layer(int n, const Rational& delta, Rng& rng) {
  Rational margin(1, 10);
  Rational p0 = delta + margin;
  if (p0 > Rational(1)) p0 = Rational(1);
  GraphBuilder b(random_graph(n, p0, rng));
  const int target = degree_target(delta, n);
  // repair: add random edges at deficient vertices
  while (true) {
    int worst = -1;
    for (int v = 0; v < n; ++v)
      if (b.degree(v) < target && (worst < 0 || b.degree(v) < b.degree(worst))) worst = v;
    if (worst < 0) break;
    std::vector<int> candidates;
    for (int u = 0; u < n; ++u)
      if (u != worst && !b.has_edge(worst, u)) candidates.push_back(u);
    if (candidates.empty())
      throw std::logic_error("min_degree_layer: vertex saturated below target degree");
    b.add_edge(worst, candidates[rng.below(candidates.size())]);
  }
  return b.build();
}

}  // namespace

GraphCollection gen_collection(const InstanceSpec& spec) {
  if (spec.model == LayerModel::extremal)
    return extremal_instance(spec.kind, spec.n, spec.kind_k).collection;

  if (spec.n < 1 || spec.h < 1) throw std::invalid_argument("gen_collection: need n >= 1 and h >= 1");
  std::vector<Graph> layers;
  layers.reserve(spec.h);
  switch (spec.model) {
    case LayerModel::iid_random: {
      for (int c = 0; c < spec.h; ++c) {
        Rng rng(hash_mix(spec.seed, static_cast<std::uint64_t>(c)));
        layers.push_back(random_graph(spec.n, spec.p, rng));
      }
      break;
    }
    case LayerModel::min_degree_conditioned: {
      if (spec.p.is_negative() || spec.p > Rational(1))
        throw std::invalid_argument("gen_collection: delta fraction must lie in [0,1]");
      if (degree_target(spec.p, spec.n) > spec.n - 1)
        throw std::invalid_argument("gen_collection: delta fraction " + spec.p.str() +
                                    " infeasible at n = " + std::to_string(spec.n));
      for (int c = 0; c < spec.h; ++c) {
        Rng rng(hash_mix(spec.seed, static_cast<std::uint64_t>(c)));
        Graph layer = min_degree_layer(spec.n, spec.p, rng);
        if (min_degree(layer) < degree_target(spec.p, spec.n))
          throw std::logic_error("gen_collection: repaired layer misses its degree target");
        layers.push_back(std::move(layer));
      }
      break;
    }
    case LayerModel::identical: {
      if (!spec.base) throw std::invalid_argument("gen_collection: identical model needs a base graph");
      if (spec.base->vertex_count() != spec.n)
        throw std::invalid_argument("gen_collection: base graph has wrong vertex count");
      for (int c = 0; c < spec.h; ++c) layers.push_back(*spec.base);
      break;
    }
    default:
      throw std::logic_error("gen_collection: unhandled model");
  }
  return GraphCollection(spec.n, std::move(layers));
}

TargetFamily target_family_parse(const std::string& name) {
  if (name == "hamilton" || name == "hamilton_cycle") return TargetFamily::hamilton_cycle;
  if (name == "power_of_cycle" || name == "cycle_power") return TargetFamily::power_of_cycle;
  if (name == "kk_factor" || name == "factor") return TargetFamily::kk_factor;
  if (name == "random_bounded") return TargetFamily::random_bounded;
  if (name == "path") return TargetFamily::path;
  if (name == "tree") return TargetFamily::tree;
  throw std::invalid_argument("unknown target family: " + name);
}

std::string target_family_str(TargetFamily f) {
  switch (f) {
    case TargetFamily::hamilton_cycle:
      return "hamilton";
    case TargetFamily::power_of_cycle:
      return "power_of_cycle";
    case TargetFamily::kk_factor:
      return "kk_factor";
    case TargetFamily::random_bounded:
      return "random_bounded";
    case TargetFamily::path:
      return "path";
    default:
      return "tree";
  }
}

namespace {

Graph build_target_graph(const TargetSpec& spec) {
  switch (spec.family) {
    case TargetFamily::hamilton_cycle:
      return Graph::cycle(spec.n);
    case TargetFamily::power_of_cycle:
      return Graph::cycle_power(spec.n, spec.k);
    case TargetFamily::kk_factor:
      if (spec.n % spec.k != 0)
        throw std::invalid_argument("gen_target: kk_factor needs k | n");
      return Graph::disjoint_cliques(spec.n / spec.k, spec.k);
    case TargetFamily::path:
      return Graph::path(spec.n);
    case TargetFamily::tree: {
      if (spec.max_degree < 2) throw std::invalid_argument("gen_target: tree needs max_degree >= 2");
      Rng rng(hash_mix(spec.seed, 0x7ee5u));
      GraphBuilder b(spec.n);
      for (int v = 1; v < spec.n; ++v) {
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u)
          if (b.degree(u) < spec.max_degree) eligible.push_back(u);
        if (eligible.empty()) throw std::invalid_argument("gen_target: degree bound too tight for a tree");
        b.add_edge(v, eligible[rng.below(eligible.size())]);
      }
      return b.build();
    }
    case TargetFamily::random_bounded: {
      // random edges within the bandwidth window under the identity order,
      // respecting the degree cap
      Rng rng(hash_mix(spec.seed, 0xb0bdu));
      GraphBuilder b(spec.n);
      std::vector<std::pair<int, int>> window;
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n && v - u <= spec.bandwidth_bound; ++v) window.emplace_back(u, v);
      rng.shuffle(window);
      for (auto [u, v] : window)
        if (b.degree(u) < spec.max_degree && b.degree(v) < spec.max_degree && rng.bernoulli({2, 3}))
          b.add_edge(u, v);
      return b.build();
    }
    default:
      throw std::logic_error("gen_target: unhandled family");
  }
}

}  // namespace

TargetBundle gen_target(const TargetSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gen_target: need n >= 1");
  Graph h = build_target_graph(spec);

  BandwidthOrdering ordering =
      compute_ordering(h, h.vertex_count() <= kExactOrderingCap ? OrderingMode::exact
                                                                : OrderingMode::heuristic,
                       50'000'000, spec.seed);

  // chi(H) by incremental exact search
  std::optional<ProperColoring> coloring;
  for (int k = 1; k <= h.vertex_count(); ++k) {
    coloring = proper_coloring(h, k);
    if (coloring) break;
  }
  if (!coloring) throw std::logic_error("gen_target: no proper coloring found");

  // declared family bounds, re-checked on every generated instance
  switch (spec.family) {
    case TargetFamily::hamilton_cycle:
      if (max_degree(h) != 2) throw std::logic_error("gen_target: hamilton bound violated");
      break;
    case TargetFamily::power_of_cycle:
      if (max_degree(h) > 2 * spec.k) throw std::logic_error("gen_target: cycle power bound violated");
      if (coloring->k > spec.k + 2) throw std::logic_error("gen_target: cycle power chromatic bound");
      break;
    case TargetFamily::kk_factor:
      if (coloring->k != spec.k || ordering.width != spec.k - 1)
        throw std::logic_error("gen_target: factor bounds violated");
      break;
    case TargetFamily::random_bounded:
      if (max_degree(h) > spec.max_degree || ordering.width > spec.bandwidth_bound)
        throw std::logic_error("gen_target: random_bounded bounds violated");
      break;
    case TargetFamily::tree:
      if (max_degree(h) > spec.max_degree) throw std::logic_error("gen_target: tree bound violated");
      break;
    case TargetFamily::path:
      if (ordering.width != (spec.n > 1 ? 1 : 0)) throw std::logic_error("gen_target: path bound violated");
      break;
  }
  return TargetBundle{std::move(h), std::move(ordering), std::move(*coloring)};
}

ExtremalInstance extremal_instance(ExtremalKind kind, int n, int k) {
  switch (kind) {
    case ExtremalKind::dirac_hamilton: {
      if (n < 4) throw std::invalid_argument("extremal_instance: dirac-hamilton needs n >= 4");
      // unbalanced complete bipartite: delta = ceil(n/2) - 1, no Hamilton
      // cycle in the union, hence none in any transversal
      int small = (n + 1) / 2 - 1;
      Graph layer = Graph::complete_multipartite({small, n - small});
      std::vector<Graph> layers(n, layer);
      TargetSpec tspec;
      tspec.family = TargetFamily::hamilton_cycle;
      tspec.n = n;
      return ExtremalInstance{GraphCollection(n, std::move(layers)), gen_target(tspec),
                              "identical K_{" + std::to_string(small) + "," + std::to_string(n - small) +
                                  "} layers vs a Hamilton cycle"};
    }
    case ExtremalKind::kpartite_factor: {
      if (k < 2) throw std::invalid_argument("extremal_instance: need k >= 2");
      if (n % k != 0 || n / k < 2)
        throw std::invalid_argument("extremal_instance: kpartite-factor needs k | n and n/k >= 2");
      // complete k-partite with one part oversized by one: the independent
      // part of size n/k + 1 cannot be covered by disjoint K_k's
      std::vector<int> parts(k, n / k);
      parts[0] += 1;
      parts[k - 1] -= 1;
      Graph layer = Graph::complete_multipartite(parts);
      int h = (n / k) * k * (k - 1) / 2;
      std::vector<Graph> layers(h, layer);
      TargetSpec tspec;
      tspec.family = TargetFamily::kk_factor;
      tspec.n = n;
      tspec.k = k;
      return ExtremalInstance{GraphCollection(n, std::move(layers)), gen_target(tspec),
                              "complete " + std::to_string(k) + "-partite layers with an oversized part"};
    }
    case ExtremalKind::space_barrier_triangle: {
      // three layers on three vertices leaving one pair with empty
      // availability
      Graph g1 = Graph::from_edges(3, {{0, 1}});
      Graph g2 = Graph::from_edges(3, {{0, 1}, {1, 2}});
      Graph g3 = Graph::from_edges(3, {{1, 2}});
      TargetSpec tspec;
      tspec.family = TargetFamily::hamilton_cycle;
      tspec.n = 3;
      return ExtremalInstance{GraphCollection(3, {g1, g2, g3}), gen_target(tspec),
                              "pair 0-2 has empty availability; no transversal triangle"};
    }
    default:
      throw std::logic_error("extremal_instance: unhandled kind");
  }
}

std::string SweepRow::csv() const {
  std::ostringstream out;
  out << n << "," << h << "," << family << "," << k << "," << delta_frac.str() << "," << trials << ","
      << found << "," << notfound << "," << exhausted << "," << mean_ms << "," << seed;
  return out.str();
}

std::string SweepRow::key() const {
  std::ostringstream out;
  out << n << "," << family << "," << k << "," << delta_frac.str() << "," << trials << "," << seed;
  return out.str();
}

std::vector<SweepRow> threshold_sweep(const SweepGrid& grid, std::ostream& csv,
                                      const std::optional<std::string>& checkpoint_path, int threads) {
  if (grid.trials < 1) throw std::invalid_argument("threshold_sweep: need trials >= 1");

  // row-keyed checkpoint: "key|csv-row" lines
  std::map<std::string, std::string> checkpoint;
  if (checkpoint_path) {
    std::ifstream in(*checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      auto bar = line.find('|');
      if (bar != std::string::npos) checkpoint[line.substr(0, bar)] = line.substr(bar + 1);
    }
  }

  if (threads > 0) omp_set_num_threads(threads);

  std::vector<SweepRow> rows;
  csv << sweep_csv_header() << "\n";
  long long cell_index = -1;
  for (int n : grid.sizes) {
    for (const Rational& delta : grid.delta_fracs) {
      ++cell_index;
      TargetSpec tspec;
      tspec.family = grid.family;
      tspec.n = n;
      tspec.k = grid.k;
      tspec.seed = grid.base_seed;
      TargetBundle target = gen_target(tspec);
      const int h = target.graph.edge_count();

      SweepRow row;
      row.n = n;
      row.h = h;
      row.family = target_family_str(grid.family);
      row.k = grid.k;
      row.delta_frac = delta;
      row.trials = grid.trials;
      row.seed = grid.base_seed;

      if (auto it = checkpoint.find(row.key()); it != checkpoint.end()) {
        csv << it->second << "\n";
        csv.flush();
        std::istringstream parse(it->second);
        std::string tok;
        for (int f = 0; f < 6; ++f) std::getline(parse, tok, ',');
        std::getline(parse, tok, ',');
        row.found = std::stoi(tok);
        std::getline(parse, tok, ',');
        row.notfound = std::stoi(tok);
        std::getline(parse, tok, ',');
        row.exhausted = std::stoi(tok);
        rows.push_back(row);
        continue;
      }

      double total_ms = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total_ms)
      for (int t = 0; t < grid.trials; ++t) {
        std::uint64_t trial_seed =
            grid.base_seed ^ splitmix64((static_cast<std::uint64_t>(cell_index) << 32) |
                                        static_cast<std::uint64_t>(t));
        InstanceSpec ispec;
        ispec.n = n;
        ispec.h = h;
        ispec.model = LayerModel::min_degree_conditioned;
        ispec.p = delta;
        ispec.seed = trial_seed;
        GraphCollection coll = gen_collection(ispec);

        SearchConfig cfg;
        cfg.node_budget = grid.node_budget;
        cfg.time_budget_ms = grid.time_budget_ms;
        SolveResult result = find_transversal(coll, target.graph, cfg);
        total_ms += static_cast<double>(result.stats.elapsed_ms);
#pragma omp critical(gt_sweep_tally)
        {
          if (result.outcome == Outcome::found)
            ++row.found;
          else if (result.outcome == Outcome::not_found)
            ++row.notfound;
          else
            ++row.exhausted;
        }
      }
      row.mean_ms = total_ms / grid.trials;
      csv << row.csv() << "\n";
      csv.flush();
      if (checkpoint_path) {
        std::ofstream out(*checkpoint_path, std::ios::app);
        out << row.key() << "|" << row.csv() << "\n";
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace gt
