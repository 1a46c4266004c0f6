#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gt/graph.hpp"
#include "gt/rational.hpp"

namespace gt {

// Kernel dispatch: `serial` is the reference implementation, `parallel` the
// OpenMP one; both produce identical results (same witnesses). `automatic`
// picks parallel when more than one thread is available.
enum class Exec { automatic, serial, parallel };

inline constexpr int kExactRegularityCap = 16;

Rational pair_density(const Graph& g, const VertexSet& a, const VertexSet& b);

enum class TriVerdict { yes, no, untested };

struct RegularityWitness {
  VertexSet a_subset;
  VertexSet b_subset;
  Rational subpair_density;
};

struct RegularVerdict {
  TriVerdict verdict = TriVerdict::untested;
  std::optional<RegularityWitness> witness;
};

// Exhaustive epsilon-regularity test: yes iff every subpair A' x B' with
// |A'| >= eps|A|, |B'| >= eps|B| has |d(A',B') - d| <= eps. d defaults to
// the pair's own density. Sides above kExactRegularityCap return untested.
// For fixed A' only extremal B' (top/bottom degree sums per size) can
// violate, which keeps the scan at 2^|A| * O(|B|^2) instead of 4^16.
RegularVerdict test_regular_exact(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  const Tolerance& eps, std::optional<Rational> d = std::nullopt,
                                  Exec exec = Exec::automatic);

enum class QuasiSide { a, b };
enum class QuasiKind { degree, codegree };

struct QuasiWitness {
  QuasiSide side;
  QuasiKind kind;
  int u = -1;
  int v = -1;  // -1 for degree violations
  int value = 0;
};

struct QuasiVerdict {
  bool ok = false;
  std::optional<QuasiWitness> witness;
};

// Quasi-randomness: every vertex degree is (1 +- eps) p |opposite| and every
// codegree of two distinct same-side vertices is (1 +- eps) p^2 |opposite|.
// Checks run in order (A degrees, A codegrees, B degrees, B codegrees) and
// the first violation is reported.
QuasiVerdict test_quasi_random(const Graph& g, const VertexSet& a, const VertexSet& b,
                               const Rational& eps, const Rational& p, Exec exec = Exec::automatic);

// Iteratively removes vertices with fewer than (d - eps) |opposite side|
// cross-neighbors; returns the fixed point, or nullopt when a side empties.
std::optional<std::pair<VertexSet, VertexSet>> super_regular_core(const Graph& g, const VertexSet& a,
                                                                  const VertexSet& b,
                                                                  const Tolerance& eps,
                                                                  const Rational& d);

// Pairs (u, v) in parts[i] x parts[j] with codegree >= (d^2 - 4 eps^(1/2))
// |V_m| into every other part and cross-degrees >= (d - 4 eps^(1/2)) into
// each other's part. Thresholds are decided exactly via squaring.
std::vector<std::pair<int, int>> typical_pairs(const Graph& g, const std::vector<VertexSet>& parts,
                                               const Rational& eps, const Rational& d, int i = 0,
                                               int j = 1);

// Density / degree / codegree statistics plus the verdicts, as a flat
// key-value block for CLI output.
struct PairReport {
  int a_size = 0;
  int b_size = 0;
  long long edges = 0;
  Rational density;
  std::vector<int> degree_hist_a;  // index = degree into B
  std::vector<int> degree_hist_b;
  long long codegree_sq_sum_a = 0;  // sum over unordered pairs of d(u,v)^2
  long long codegree_sq_sum_b = 0;
  TriVerdict exact_regular = TriVerdict::untested;
  std::optional<bool> quasi_random;
  std::optional<bool> super_regular;
  std::optional<RegularityWitness> witness;

  std::string to_kv() const;
};

PairReport make_pair_report(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const Tolerance& eps, std::optional<Rational> d = std::nullopt,
                            std::optional<Rational> p = std::nullopt, Exec exec = Exec::automatic);

}  // namespace gt
