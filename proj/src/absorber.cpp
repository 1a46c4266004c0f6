#include "gt/absorber.hpp"

#include <omp.h>

#include <algorithm>
#include <istream>
#include <sstream>

#include "gt/fraction.hpp"
#include "gt/io.hpp"
#include "gt/matching.hpp"
#include "gt/rng.hpp"

namespace gt {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1'000'000'000LL) return r;  // saturate, only compared against small caps
  }
  return r;
}

// All k-subsets of `items` in lexicographic order.
std::vector<std::vector<int>> k_subsets(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(items.size());
  if (k == 0) return {{}};
  if (k > n) return out;
  while (true) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = items[idx[i]];
    out.push_back(std::move(pick));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool matchable(const std::vector<ColorSet>& availability, const ColorSet& allowed, int h) {
  std::vector<Bitset> nbrs;
  nbrs.reserve(availability.size());
  for (const ColorSet& av : availability) nbrs.push_back(av & allowed);
  std::vector<int> match = max_bipartite_matching(nbrs, h);
  for (int m : match)
    if (m < 0) return false;
  return true;
}

}  // namespace

std::pair<AbsorberTemplate, AbsorberBuildReport> build_absorber(
    const GraphCollection& coll, const std::vector<std::pair<int, int>>& f_edges, int flex,
    int c_size, int min_avail, const AbsorberConfig& cfg) {
  const int h = coll.color_count();
  const int m = static_cast<int>(f_edges.size());
  if (m == 0) throw std::invalid_argument("build_absorber: empty edge set");
  if (m > h) throw std::invalid_argument("build_absorber: more edges than colors");
  if (flex < 0 || flex > m) throw std::invalid_argument("build_absorber: need 0 <= flex <= |F|");
  if (c_size < flex)
    throw std::invalid_argument("build_absorber: c_size must be at least flex");
  if (min_avail < 1) throw std::invalid_argument("build_absorber: need min_avail >= 1");

  std::vector<ColorSet> availability;
  availability.reserve(m);
  for (auto [u, v] : f_edges) {
    ColorSet av = color_availability(coll, u, v);
    if (av.count() < min_avail)
      throw AbsorberError(AbsorberError::Kind::infeasible,
                          "build_absorber: edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " has fewer than min_avail available colors",
                          {u, v});
    availability.push_back(std::move(av));
  }

  // Step 1: perfect matching edges -> colors.
  std::vector<int> match = max_bipartite_matching(availability, h);
  {
    std::vector<int> unmatched;
    for (int e = 0; e < m; ++e)
      if (match[e] < 0) unmatched.push_back(e);
    if (!unmatched.empty()) {
      auto viol = hall_violation(availability, h);
      throw AbsorberError(AbsorberError::Kind::hall_violation,
                          "build_absorber: no perfect matching from edges into colors",
                          viol ? viol->left_items : unmatched);
    }
  }

  // Release `flex` matched colors, preferring the edges that can re-match
  // most easily (largest availability), so A keeps the constrained ones.
  std::vector<int> edge_order(m);
  for (int e = 0; e < m; ++e) edge_order[e] = e;
  std::sort(edge_order.begin(), edge_order.end(), [&](int x, int y) {
    int ax = availability[x].count(), ay = availability[y].count();
    return ax != ay ? ax > ay : x < y;
  });
  ColorSet matched(h);
  for (int e = 0; e < m; ++e) matched.set(match[e]);
  ColorSet released(h);
  for (int i = 0; i < flex; ++i) released.set(match[edge_order[i]]);
  ColorSet colors_a = matched;
  colors_a.and_not(released);

  // Step 2: C from unmatched colors available to at least min(tau, m) edges.
  const int tau = cfg.tau >= 0 ? cfg.tau : flex + 1;
  const int tau_eff = std::min(tau, m);
  ColorSet colors_c(h);
  int picked = 0;
  for (int c = 0; c < h && picked < c_size; ++c) {
    if (matched.test(c)) continue;
    int deg = 0;
    for (int e = 0; e < m; ++e)
      if (availability[e].test(c)) ++deg;
    if (deg >= tau_eff) {
      colors_c.set(c);
      ++picked;
    }
  }
  if (picked < c_size)
    throw AbsorberError(AbsorberError::Kind::infeasible,
                        "build_absorber: only " + std::to_string(picked) + " of " +
                            std::to_string(c_size) + " flexible colors qualify (tau threshold " +
                            std::to_string(tau_eff) + ")",
                        {});

  // Step 3: verify resilience over leftover sets C'.
  std::vector<int> c_items = colors_c.items();
  const long long all_sets = binomial(static_cast<int>(c_items.size()), flex);
  const bool exhaustive = cfg.force_exhaustive || all_sets <= 10'000;

  std::vector<std::vector<int>> trials;
  if (exhaustive) {
    trials = k_subsets(c_items, flex);
  } else {
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
      std::vector<int> pool = c_items;
      rng.shuffle(pool);
      pool.resize(flex);
      std::sort(pool.begin(), pool.end());
      trials.push_back(std::move(pool));
    }
  }

  long long failed = -1;
  const bool parallel = cfg.exec != Exec::serial && trials.size() > 16;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (long long t = 0; t < static_cast<long long>(trials.size()); ++t) {
    ColorSet allowed = colors_a;
    for (int c : trials[t]) allowed.set(c);
    if (!matchable(availability, allowed, h)) {
#pragma omp critical(gt_absorber_fail)
      {
        if (failed < 0 || t < failed) failed = t;
      }
    }
  }
  if (failed >= 0)
    throw AbsorberError(AbsorberError::Kind::resilience_failure,
                        "build_absorber: resilience verification failed for a leftover set",
                        trials[failed]);

  AbsorberTemplate tpl;
  tpl.color_count = h;
  tpl.f_edges = f_edges;
  tpl.availability = std::move(availability);
  tpl.colors_a = std::move(colors_a);
  tpl.colors_c = std::move(colors_c);
  tpl.flex = flex;
  tpl.verified =
      exhaustive ? AbsorberTemplate::Verification::exhaustive : AbsorberTemplate::Verification::sampled;
  tpl.samples = exhaustive ? static_cast<int>(trials.size()) : cfg.samples;
  tpl.seed = cfg.seed;

  AbsorberBuildReport report;
  report.exhaustive = exhaustive;
  report.verified_sets = static_cast<long long>(trials.size());
  // Matching-lemma hypotheses with alpha = min_avail / h, m = e(F), n = h:
  // flex <= alpha^7 m / 1e5 and alpha^2 n >= 8 m.
  {
    Rational alpha(min_avail, h);
    Rational a7 = alpha * alpha * alpha * alpha * alpha * alpha * alpha;
    bool hyp1 = Rational(flex) * Rational(100'000) <= a7 * Rational(m);
    bool hyp2 = alpha * alpha * Rational(h) >= Rational(8) * Rational(m);
    report.lemma_hypotheses_hold = hyp1 && hyp2;
    report.note = report.lemma_hypotheses_hold
                      ? "asymptotic hypotheses hold"
                      : "asymptotic hypotheses fail at this scale; template certified by verification";
  }
  return {std::move(tpl), std::move(report)};
}

std::vector<int> absorb_colors(const AbsorberTemplate& tpl, const ColorSet& c_prime) {
  if (c_prime.universe() != tpl.color_count)
    throw std::invalid_argument("absorb_colors: color universe mismatch");
  if (!c_prime.subset_of(tpl.colors_c))
    throw AbsorberError(AbsorberError::Kind::infeasible, "absorb_colors: C' is not a subset of C",
                        c_prime.items());
  if (c_prime.count() != tpl.flex)
    throw AbsorberError(AbsorberError::Kind::infeasible,
                        "absorb_colors: |C'| = " + std::to_string(c_prime.count()) +
                            ", expected " + std::to_string(tpl.flex),
                        c_prime.items());

  ColorSet allowed = tpl.colors_a | c_prime;
  std::vector<Bitset> nbrs;
  nbrs.reserve(tpl.availability.size());
  for (const ColorSet& av : tpl.availability) nbrs.push_back(av & allowed);
  std::vector<int> match = max_bipartite_matching(nbrs, tpl.color_count);
  for (int e = 0; e < static_cast<int>(match.size()); ++e)
    if (match[e] < 0)
      throw AbsorberError(AbsorberError::Kind::resilience_failure,
                          "absorb_colors: no perfect matching onto A union C'", c_prime.items());
  return match;
}

std::string AbsorberTemplate::to_text() const {
  std::ostringstream out;
  out << "edges:";
  for (auto [u, v] : f_edges) out << " " << u << "-" << v;
  out << "\nA:";
  for (int c = colors_a.first(); c >= 0; c = colors_a.next(c)) out << " " << c;
  out << "\nC:";
  for (int c = colors_c.first(); c >= 0; c = colors_c.next(c)) out << " " << c;
  out << "\nl: " << flex << "\n";
  if (verified == Verification::exhaustive)
    out << "verified: exhaustive\n";
  else
    out << "verified: sampled(" << samples << ", " << seed << ")\n";
  return out.str();
}

AbsorberTemplate AbsorberTemplate::from_text(std::istream& in, const GraphCollection& coll) {
  AbsorberTemplate tpl;
  tpl.color_count = coll.color_count();
  tpl.colors_a = ColorSet(coll.color_count());
  tpl.colors_c = ColorSet(coll.color_count());
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string key;
    if (!(row >> key)) continue;
    if (key == "edges:") {
      std::string tok;
      while (row >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw std::runtime_error("absorber template: bad edge " + tok);
        tpl.f_edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
      }
    } else if (key == "A:") {
      int c;
      while (row >> c) tpl.colors_a.set(c);
    } else if (key == "C:") {
      int c;
      while (row >> c) tpl.colors_c.set(c);
    } else if (key == "l:") {
      row >> tpl.flex;
    } else if (key == "verified:") {
      std::string rest;
      std::getline(row, rest);
      if (rest.find("exhaustive") != std::string::npos) {
        tpl.verified = Verification::exhaustive;
      } else {
        auto open = rest.find("sampled(");
        auto comma = rest.find(',');
        auto close = rest.find(')');
        if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
          throw std::runtime_error("absorber template: bad verified mode '" + rest + "'");
        tpl.verified = Verification::sampled;
        tpl.samples = std::stoi(rest.substr(open + 8, comma - open - 8));
        tpl.seed = std::stoull(rest.substr(comma + 1, close - comma - 1));
      }
    }
  }
  for (auto [u, v] : tpl.f_edges) tpl.availability.push_back(color_availability(coll, u, v));
  return tpl;
}

}  // namespace gt
