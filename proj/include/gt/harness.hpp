#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gt/bandwidth.hpp"
#include "gt/graph.hpp"
#include "gt/rational.hpp"
#include "gt/solver.hpp"

namespace gt {

enum class LayerModel { iid_random, min_degree_conditioned, identical, extremal };
enum class ExtremalKind { dirac_hamilton, kpartite_factor, space_barrier_triangle };

struct InstanceSpec {
  int n = 0;
  int h = 0;
  LayerModel model = LayerModel::iid_random;
  Rational p{1, 2};           // edge probability (iid) or delta fraction (min-degree)
  std::optional<Graph> base;  // identical model
  ExtremalKind kind = ExtremalKind::dirac_hamilton;
  int kind_k = 3;  // k for kpartite_factor
  std::uint64_t seed = 0;
};

// Deterministic from the seed. The min-degree model starts from iid layers
// at p = delta + margin and repairs deficient vertices by adding random
// edges until every layer meets ceil(delta * n).
GraphCollection gen_collection(const InstanceSpec& spec);

enum class TargetFamily { hamilton_cycle, power_of_cycle, kk_factor, random_bounded, path, tree };

TargetFamily target_family_parse(const std::string& name);
std::string target_family_str(TargetFamily f);

struct TargetSpec {
  TargetFamily family = TargetFamily::hamilton_cycle;
  int n = 0;
  int k = 2;               // power_of_cycle / kk_factor parameter
  int max_degree = 3;      // random_bounded / tree bound
  int bandwidth_bound = 2; // random_bounded: edges only within this stretch
  std::uint64_t seed = 0;
};

struct TargetBundle {
  Graph graph;
  BandwidthOrdering ordering;
  ProperColoring coloring;  // chi(H) colors, found by exact search
};

// H plus a witness ordering and coloring. Orderings are computed, not
// folklore constants: exact search up to the cap, heuristic beyond it.
TargetBundle gen_target(const TargetSpec& spec);

struct ExtremalInstance {
  GraphCollection collection;
  TargetBundle target;
  std::string description;
};

// Classical constructions paired with the target they provably lack; the
// solver must return not-found on each.
ExtremalInstance extremal_instance(ExtremalKind kind, int n, int k = 3);

struct SweepGrid {
  std::vector<int> sizes;  // n values; h is derived per family (e(H))
  TargetFamily family = TargetFamily::hamilton_cycle;
  int k = 2;
  std::vector<Rational> delta_fracs;
  int trials = 100;
  std::uint64_t base_seed = 1;
  std::uint64_t node_budget = 10'000'000;
  std::int64_t time_budget_ms = 600'000;
};

struct SweepRow {
  int n = 0;
  int h = 0;
  std::string family;
  int k = 0;
  Rational delta_frac;
  int trials = 0;
  int found = 0;
  int notfound = 0;
  int exhausted = 0;
  double mean_ms = 0.0;
  std::uint64_t seed = 0;

  std::string csv() const;
  std::string key() const;  // stable checkpoint key (everything but timing)
};

inline const char* sweep_csv_header() {
  return "n,h,family,k,delta_frac,trials,found,notfound,exhausted,mean_ms,seed";
}

// One row per (n, delta) grid cell; trials run in an OpenMP pool, rows are
// emitted in grid order regardless of completion order. Per-trial seeds
// derive as base ^ splitmix64(cell_index * 2^32 + trial_index), so a cell is
// reproducible in isolation. Rows found in `checkpoint` are reused verbatim.
std::vector<SweepRow> threshold_sweep(const SweepGrid& grid, std::ostream& csv,
                                      const std::optional<std::string>& checkpoint_path = std::nullopt,
                                      int threads = 0);

}  // namespace gt
