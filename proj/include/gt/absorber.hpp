#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gt/graph.hpp"
#include "gt/regularity.hpp"

namespace gt {

// Pre-embedded edge set F with reserved color sets A and C: any later
// leftover C' of size `flex` completes a rainbow coloring of F inside
// A union C'. Built by matching plus verification, not by the asymptotic
// construction; a template is only returned after its resilience has been
// checked (exhaustively when C(|C|, flex) is small, sampled otherwise).
struct AbsorberTemplate {
  int color_count = 0;
  std::vector<std::pair<int, int>> f_edges;
  std::vector<ColorSet> availability;  // per edge
  ColorSet colors_a;
  ColorSet colors_c;
  int flex = 0;  // |C'| required later

  enum class Verification { exhaustive, sampled };
  Verification verified = Verification::exhaustive;
  int samples = 0;
  std::uint64_t seed = 0;

  std::string to_text() const;
  static AbsorberTemplate from_text(std::istream& in, const GraphCollection& coll);
};

struct AbsorberConfig {
  // Replaceability threshold: a candidate C-color must be available to at
  // least min(tau, |F|) edges. tau < 0 means the default flex + 1.
  int tau = -1;
  int samples = 50;
  std::uint64_t seed = 0;
  bool force_exhaustive = false;
  Exec exec = Exec::automatic;
};

// Verification transcript plus the feasibility arithmetic of the underlying
// matching lemma (reported, not enforced; desk-scale instances are far below
// its asymptotic hypotheses).
struct AbsorberBuildReport {
  bool exhaustive = false;
  long long verified_sets = 0;
  bool lemma_hypotheses_hold = false;
  std::string note;
};

class AbsorberError : public std::runtime_error {
 public:
  enum class Kind { infeasible, hall_violation, resilience_failure };
  AbsorberError(Kind kind, const std::string& what, std::vector<int> certificate)
      : std::runtime_error(what), kind_(kind), certificate_(std::move(certificate)) {}
  Kind kind() const { return kind_; }
  // deficient edge indices for hall_violation, failing C' for resilience_failure
  const std::vector<int>& certificate() const { return certificate_; }

 private:
  Kind kind_;
  std::vector<int> certificate_;
};

std::pair<AbsorberTemplate, AbsorberBuildReport> build_absorber(
    const GraphCollection& coll, const std::vector<std::pair<int, int>>& f_edges, int flex,
    int c_size, int min_avail, const AbsorberConfig& cfg = {});

// Bijection edge -> color onto exactly A union C'; throws AbsorberError when
// C' is not an admissible leftover or no perfect matching exists.
std::vector<int> absorb_colors(const AbsorberTemplate& tpl, const ColorSet& c_prime);

}  // namespace gt
