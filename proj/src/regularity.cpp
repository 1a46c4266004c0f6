#include "gt/regularity.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gt {

namespace {

void check_pair(const Graph& g, const VertexSet& a, const VertexSet& b, const char* who) {
  if (a.universe() != g.vertex_count() || b.universe() != g.vertex_count())
    throw std::invalid_argument(std::string(who) + ": universe mismatch");
  if (a.none() || b.none()) throw std::invalid_argument(std::string(who) + ": empty side");
  if (a.intersects(b)) throw std::invalid_argument(std::string(who) + ": sides overlap");
}

long long count_cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long e = 0;
  for (int u = a.first(); u >= 0; u = a.next(u)) e += g.neighbors(u).intersection_count(b);
  return e;
}

// |num/den| <= eps with den > 0, avoiding Rational construction off the
// boundary.
bool diff_within(long long num, long long den, const Tolerance& eps) {
  long long mag = std::llabs(num);
  if (eps.root() == 1) {
    return static_cast<__int128>(mag) * eps.rho().den() <=
           static_cast<__int128>(eps.rho().num()) * den;
  }
  double x = static_cast<double>(mag) / static_cast<double>(den);
  double t = eps.to_double();
  if (t > 0) {
    if (x < t * (1.0 - 1e-9)) return true;
    if (x > t * (1.0 + 1e-9)) return false;
  }
  return eps.admits_abs(Rational(num, den));
}

bool resolve_parallel(Exec exec) {
  switch (exec) {
    case Exec::serial:
      return false;
    case Exec::parallel:
      return true;
    case Exec::automatic:
    default:
      return omp_get_max_threads() > 1;
  }
}

// Smallest subset size s in [1, side] with s >= eps * side.
int min_qualifying_size(int side, const Tolerance& eps) {
  for (int s = 1; s <= side; ++s)
    if (eps.at_least(Rational(s, side))) return s;
  return side + 1;  // eps > 1: nothing qualifies
}

struct SubpairScan {
  std::vector<int> a_items, b_items;
  std::vector<std::uint32_t> rows_b;  // per B vertex: neighbor mask over A indices
  std::vector<std::uint32_t> mask_order;
  int a0 = 1, b0 = 1;
  Rational d;
  Tolerance eps;

  SubpairScan(const Graph& g, const VertexSet& a, const VertexSet& b, const Tolerance& eps_in,
              const Rational& d_in)
      : d(d_in), eps(eps_in) {
    a_items = a.items();
    b_items = b.items();
    rows_b.resize(b_items.size());
    for (std::size_t bi = 0; bi < b_items.size(); ++bi) {
      std::uint32_t mask = 0;
      for (std::size_t ai = 0; ai < a_items.size(); ++ai)
        if (g.adjacent(b_items[bi], a_items[ai])) mask |= (1u << ai);
      rows_b[bi] = mask;
    }
    a0 = min_qualifying_size(static_cast<int>(a_items.size()), eps);
    b0 = min_qualifying_size(static_cast<int>(b_items.size()), eps);
    const std::uint32_t total = 1u << a_items.size();
    for (std::uint32_t m = 1; m < total; ++m)
      if (std::popcount(m) >= a0) mask_order.push_back(m);
    std::stable_sort(mask_order.begin(), mask_order.end(), [](std::uint32_t x, std::uint32_t y) {
      return std::popcount(x) != std::popcount(y) ? std::popcount(x) > std::popcount(y) : x < y;
    });
  }

  int checks_per_mask() const { return 2 * (static_cast<int>(b_items.size()) + 1); }

  // Returns the first violating check rank for this A' mask, or -1. Only
  // extremal B' per size can violate: e(A',B') is a sum of B-degrees into
  // A', so max/min over |B'| = m is reached at the m largest/smallest.
  int scan_mask(std::uint32_t mask) const {
    const int bs = static_cast<int>(b_items.size());
    const int a_sz = std::popcount(mask);
    int cnt[kExactRegularityCap + 1] = {0};
    long long total = 0;
    for (int bi = 0; bi < bs; ++bi) {
      int deg = std::popcount(rows_b[bi] & mask);
      ++cnt[deg];
      total += deg;
    }
    // prefix sums of degrees sorted descending / ascending
    std::vector<long long> pre_desc(bs + 1, 0), pre_asc(bs + 1, 0);
    {
      int idx = 0;
      for (int dg = a_sz; dg >= 0; --dg)
        for (int c = 0; c < cnt[dg]; ++c) {
          pre_desc[idx + 1] = pre_desc[idx] + dg;
          ++idx;
        }
      idx = 0;
      for (int dg = 0; dg <= a_sz; ++dg)
        for (int c = 0; c < cnt[dg]; ++c) {
          pre_asc[idx + 1] = pre_asc[idx] + dg;
          ++idx;
        }
    }
    for (int m = bs; m >= b0; --m) {
      const long long denom = static_cast<long long>(a_sz) * m * d.den();
      const long long e_hi = pre_desc[m];
      if (!diff_within(e_hi * d.den() - d.num() * a_sz * m, denom, eps)) return (bs - m) * 2;
      const long long e_lo = pre_asc[m];
      if (!diff_within(e_lo * d.den() - d.num() * a_sz * m, denom, eps)) return (bs - m) * 2 + 1;
    }
    return -1;
  }

  RegularityWitness build_witness(const Graph& g, std::uint32_t mask, int check_rank) const {
    const int bs = static_cast<int>(b_items.size());
    const int m = bs - check_rank / 2;
    const bool want_max = (check_rank % 2) == 0;
    std::vector<int> order(bs);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      int dx = std::popcount(rows_b[x] & mask), dy = std::popcount(rows_b[y] & mask);
      return want_max ? dx > dy : dx < dy;
    });
    VertexSet a_sub(g.vertex_count()), b_sub(g.vertex_count());
    for (std::size_t ai = 0; ai < a_items.size(); ++ai)
      if (mask & (1u << ai)) a_sub.set(a_items[ai]);
    for (int i = 0; i < m; ++i) b_sub.set(b_items[order[i]]);
    return RegularityWitness{a_sub, b_sub, pair_density(g, a_sub, b_sub)};
  }
};

}  // namespace

Rational pair_density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_pair(g, a, b, "pair_density");
  long long e = count_cross_edges(g, a, b);
  return Rational(e, static_cast<long long>(a.count()) * b.count());
}

RegularVerdict test_regular_exact(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  const Tolerance& eps, std::optional<Rational> d, Exec exec) {
  check_pair(g, a, b, "test_regular_exact");
  if (a.count() > kExactRegularityCap || b.count() > kExactRegularityCap)
    return RegularVerdict{TriVerdict::untested, std::nullopt};

  Rational density = d ? *d : pair_density(g, a, b);
  SubpairScan scan(g, a, b, eps, density);
  const long long n_masks = static_cast<long long>(scan.mask_order.size());
  const long long stride = scan.checks_per_mask();

  long long best_key = LLONG_MAX;
  std::uint32_t best_mask = 0;

  if (!resolve_parallel(exec)) {
    for (long long i = 0; i < n_masks; ++i) {
      int rank = scan.scan_mask(scan.mask_order[i]);
      if (rank >= 0) {
        best_key = i * stride + rank;
        best_mask = scan.mask_order[i];
        break;
      }
    }
  } else {
    std::atomic<long long> shared_best{LLONG_MAX};
#pragma omp parallel
    {
      long long local_key = LLONG_MAX;
      std::uint32_t local_mask = 0;
#pragma omp for schedule(dynamic, 256)
      for (long long i = 0; i < n_masks; ++i) {
        if (i * stride >= shared_best.load(std::memory_order_relaxed)) continue;
        int rank = scan.scan_mask(scan.mask_order[i]);
        if (rank >= 0) {
          long long key = i * stride + rank;
          if (key < local_key) {
            local_key = key;
            local_mask = scan.mask_order[i];
            long long cur = shared_best.load(std::memory_order_relaxed);
            while (key < cur && !shared_best.compare_exchange_weak(cur, key)) {
            }
          }
        }
      }
#pragma omp critical(gt_regular_best)
      {
        if (local_key < best_key) {
          best_key = local_key;
          best_mask = local_mask;
        }
      }
    }
  }

  if (best_key == LLONG_MAX) return RegularVerdict{TriVerdict::yes, std::nullopt};
  int rank = static_cast<int>(best_key % stride);
  return RegularVerdict{TriVerdict::no, scan.build_witness(g, best_mask, rank)};
}

namespace {

struct QuasiBounds {
  Rational deg_lo, deg_hi, codeg_lo, codeg_hi;
};

QuasiBounds quasi_bounds(const Rational& eps, const Rational& p, int opposite) {
  Rational one(1);
  Rational base = p * Rational(opposite);
  Rational base2 = p * p * Rational(opposite);
  return QuasiBounds{(one - eps) * base, (one + eps) * base, (one - eps) * base2, (one + eps) * base2};
}

}  // namespace

QuasiVerdict test_quasi_random(const Graph& g, const VertexSet& a, const VertexSet& b,
                               const Rational& eps, const Rational& p, Exec exec) {
  check_pair(g, a, b, "test_quasi_random");
  std::vector<int> a_items = a.items(), b_items = b.items();

  auto degree_check = [&](QuasiSide side) -> std::optional<QuasiWitness> {
    const std::vector<int>& items = side == QuasiSide::a ? a_items : b_items;
    const VertexSet& opposite = side == QuasiSide::a ? b : a;
    QuasiBounds bounds = quasi_bounds(eps, p, opposite.count());
    for (int u : items) {
      int deg = g.neighbors(u).intersection_count(opposite);
      if (Rational(deg) < bounds.deg_lo || Rational(deg) > bounds.deg_hi)
        return QuasiWitness{side, QuasiKind::degree, u, -1, deg};
    }
    return std::nullopt;
  };

  // First violating pair in lexicographic (i, j) order; the parallel scan
  // reduces on the pair rank, so it reports the same witness as the serial
  // one.
  auto codegree_check = [&](QuasiSide side) -> std::optional<QuasiWitness> {
    const std::vector<int>& items = side == QuasiSide::a ? a_items : b_items;
    const VertexSet& opposite = side == QuasiSide::a ? b : a;
    QuasiBounds bounds = quasi_bounds(eps, p, opposite.count());
    const int count = static_cast<int>(items.size());
    std::vector<long long> base(count, 0);
    for (int i = 1; i < count; ++i) base[i] = base[i - 1] + (count - i);

    long long global_best = LLONG_MAX;
    QuasiWitness global_witness{};
    std::atomic<long long> hint{LLONG_MAX};
    const bool parallel = resolve_parallel(exec) && count >= 64;
#pragma omp parallel if (parallel)
    {
      long long local_best = LLONG_MAX;
      QuasiWitness local_witness{};
#pragma omp for schedule(dynamic, 8)
      for (int i = 0; i < count; ++i) {
        if (base[i] >= hint.load(std::memory_order_relaxed)) continue;
        for (int j = i + 1; j < count; ++j) {
          long long rank = base[i] + (j - i - 1);
          if (rank >= local_best) break;
          VertexSet common = g.neighbors(items[i]) & g.neighbors(items[j]);
          int codeg = common.intersection_count(opposite);
          if (Rational(codeg) < bounds.codeg_lo || Rational(codeg) > bounds.codeg_hi) {
            local_best = rank;
            local_witness = QuasiWitness{side, QuasiKind::codegree, items[i], items[j], codeg};
            long long cur = hint.load(std::memory_order_relaxed);
            while (rank < cur && !hint.compare_exchange_weak(cur, rank)) {
            }
            break;
          }
        }
      }
#pragma omp critical(gt_quasi_best)
      {
        if (local_best < global_best) {
          global_best = local_best;
          global_witness = local_witness;
        }
      }
    }
    if (global_best != LLONG_MAX) return global_witness;
    return std::nullopt;
  };

  // Definition order: A degrees, A codegrees, B degrees, B codegrees.
  if (auto w = degree_check(QuasiSide::a)) return QuasiVerdict{false, w};
  if (auto w = codegree_check(QuasiSide::a)) return QuasiVerdict{false, w};
  if (auto w = degree_check(QuasiSide::b)) return QuasiVerdict{false, w};
  if (auto w = codegree_check(QuasiSide::b)) return QuasiVerdict{false, w};
  return QuasiVerdict{true, std::nullopt};
}

std::optional<std::pair<VertexSet, VertexSet>> super_regular_core(const Graph& g, const VertexSet& a,
                                                                  const VertexSet& b,
                                                                  const Tolerance& eps,
                                                                  const Rational& d) {
  check_pair(g, a, b, "super_regular_core");
  VertexSet cur_a = a, cur_b = b;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [side, opp] : {std::pair<VertexSet*, VertexSet*>{&cur_a, &cur_b}, {&cur_b, &cur_a}}) {
      if (opp->none() || side->none()) return std::nullopt;
      const long long opp_size = opp->count();
      for (int v = side->first(); v >= 0; v = side->next(v)) {
        long long deg = g.neighbors(v).intersection_count(*opp);
        // keep v iff deg >= (d - eps) |opp|, i.e. (d |opp| - deg)/|opp| <= eps
        long long num = d.num() * opp_size - deg * d.den();
        if (num > 0 && !diff_within(num, d.den() * opp_size, eps)) {
          side->reset(v);
          changed = true;
        }
      }
    }
  }
  if (cur_a.none() || cur_b.none()) return std::nullopt;
  return std::make_pair(cur_a, cur_b);
}

std::vector<std::pair<int, int>> typical_pairs(const Graph& g, const std::vector<VertexSet>& parts,
                                               const Rational& eps, const Rational& d, int i, int j) {
  if (parts.size() < 2) throw std::invalid_argument("typical_pairs: need k >= 2 parts");
  if (i < 0 || j < 0 || i == j || i >= static_cast<int>(parts.size()) ||
      j >= static_cast<int>(parts.size()))
    throw std::invalid_argument("typical_pairs: bad part indices");
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = x + 1; y < parts.size(); ++y)
      if (parts[x].intersects(parts[y])) throw std::invalid_argument("typical_pairs: parts overlap");

  // x >= t - 4 eps^(1/2)  <=>  t - x <= (16 eps)^(1/2)
  Tolerance slack = Tolerance::nth_root(Rational(16) * eps, 2);
  auto meets = [&](const Rational& threshold, long long have, long long out_of) {
    Rational gap = threshold - Rational(have, out_of);
    if (gap.num() <= 0) return true;
    return slack.admits_abs(gap);
  };

  std::vector<std::pair<int, int>> out;
  Rational d_sq = d * d;
  for (int u = parts[i].first(); u >= 0; u = parts[i].next(u)) {
    if (!meets(d, g.neighbors(u).intersection_count(parts[j]), parts[j].count())) continue;
    for (int v = parts[j].first(); v >= 0; v = parts[j].next(v)) {
      if (!meets(d, g.neighbors(v).intersection_count(parts[i]), parts[i].count())) continue;
      bool ok = true;
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (std::size_t m = 0; m < parts.size() && ok; ++m) {
        if (static_cast<int>(m) == i || static_cast<int>(m) == j) continue;
        if (parts[m].none()) continue;
        if (!meets(d_sq, common.intersection_count(parts[m]), parts[m].count())) ok = false;
      }
      if (ok) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {
const char* tri_str(TriVerdict v) {
  switch (v) {
    case TriVerdict::yes:
      return "yes";
    case TriVerdict::no:
      return "no";
    default:
      return "untested";
  }
}
}  // namespace

std::string PairReport::to_kv() const {
  std::ostringstream out;
  out << "pair.a_size: " << a_size << "\n";
  out << "pair.b_size: " << b_size << "\n";
  out << "pair.edges: " << edges << "\n";
  out << "pair.density: " << density.str() << "\n";
  auto hist = [&](const char* key, const std::vector<int>& h) {
    out << key << ":";
    for (std::size_t dg = 0; dg < h.size(); ++dg)
      if (h[dg] > 0) out << " " << dg << "x" << h[dg];
    out << "\n";
  };
  hist("degree_hist.a", degree_hist_a);
  hist("degree_hist.b", degree_hist_b);
  out << "codegree_sq_sum.a: " << codegree_sq_sum_a << "\n";
  out << "codegree_sq_sum.b: " << codegree_sq_sum_b << "\n";
  out << "verdict.exact_regular: " << tri_str(exact_regular) << "\n";
  out << "verdict.quasi_random: " << (quasi_random ? (*quasi_random ? "true" : "false") : "untested")
      << "\n";
  out << "verdict.super_regular: " << (super_regular ? (*super_regular ? "true" : "false") : "untested")
      << "\n";
  if (witness) {
    out << "witness.a: " << witness->a_subset.str() << "\n";
    out << "witness.b: " << witness->b_subset.str() << "\n";
    out << "witness.density: " << witness->subpair_density.str() << "\n";
  }
  return out.str();
}

PairReport make_pair_report(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const Tolerance& eps, std::optional<Rational> d, std::optional<Rational> p,
                            Exec exec) {
  check_pair(g, a, b, "make_pair_report");
  PairReport rep;
  rep.a_size = a.count();
  rep.b_size = b.count();
  rep.edges = count_cross_edges(g, a, b);
  rep.density = pair_density(g, a, b);

  auto hist_for = [&](const VertexSet& side, const VertexSet& opp) {
    std::vector<int> hist(opp.count() + 1, 0);
    for (int v = side.first(); v >= 0; v = side.next(v))
      ++hist[g.neighbors(v).intersection_count(opp)];
    return hist;
  };
  rep.degree_hist_a = hist_for(a, b);
  rep.degree_hist_b = hist_for(b, a);

  auto codeg_sq = [&](const VertexSet& side, const VertexSet& opp) {
    long long sum = 0;
    std::vector<int> items = side.items();
    for (std::size_t x = 0; x < items.size(); ++x)
      for (std::size_t y = x + 1; y < items.size(); ++y) {
        VertexSet common = g.neighbors(items[x]) & g.neighbors(items[y]);
        long long c = common.intersection_count(opp);
        sum += c * c;
      }
    return sum;
  };
  rep.codegree_sq_sum_a = codeg_sq(a, b);
  rep.codegree_sq_sum_b = codeg_sq(b, a);

  Rational dd = d ? *d : rep.density;
  RegularVerdict rv = test_regular_exact(g, a, b, eps, dd, exec);
  rep.exact_regular = rv.verdict;
  rep.witness = rv.witness;

  if (p) rep.quasi_random = test_quasi_random(g, a, b, eps.rho(), *p, exec).ok;

  if (rep.exact_regular != TriVerdict::untested) {
    bool degrees_ok = true;
    for (int v = a.first(); v >= 0 && degrees_ok; v = a.next(v)) {
      long long deg = g.neighbors(v).intersection_count(b);
      long long num = dd.num() * b.count() - deg * dd.den();
      if (num > 0 && !diff_within(num, dd.den() * static_cast<long long>(b.count()), eps))
        degrees_ok = false;
    }
    for (int v = b.first(); v >= 0 && degrees_ok; v = b.next(v)) {
      long long deg = g.neighbors(v).intersection_count(a);
      long long num = dd.num() * a.count() - deg * dd.den();
      if (num > 0 && !diff_within(num, dd.den() * static_cast<long long>(a.count()), eps))
        degrees_ok = false;
    }
    rep.super_regular = (rep.exact_regular == TriVerdict::yes) && degrees_ok;
  }
  return rep;
}

}  // namespace gt
