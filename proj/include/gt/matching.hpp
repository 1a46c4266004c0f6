#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gt/bitset.hpp"

namespace gt {

// Left-perfect bipartite matching maintained one left item at a time, with
// rollback in LIFO order. The solver pushes a left item per newly closed
// H-edge and pops on backtrack; each push runs one augmenting-path search.
class IncrementalMatcher {
 public:
  explicit IncrementalMatcher(int right_count);

  int left_count() const { return static_cast<int>(nbrs_.size()); }
  int right_count() const { return right_count_; }

  // Tries to add a left item keeping the matching left-perfect. On failure
  // nothing is retained and false is returned.
  bool push(const Bitset& right_nbrs);
  void pop();

  // right item matched to left item l
  int matched_right(int l) const { return match_left_[l]; }

  std::uint64_t augment_steps() const { return augment_steps_; }

 private:
  bool augment(int l, std::vector<char>& visited);

  int right_count_;
  std::vector<Bitset> nbrs_;
  std::vector<int> match_left_;           // left -> right
  std::vector<int> match_right_;          // right -> left (-1 free)
  std::vector<std::vector<int>> trail_;   // rights re-matched by each push
  std::uint64_t augment_steps_ = 0;
};

// One-shot maximum matching; match[l] = right or -1.
std::vector<int> max_bipartite_matching(const std::vector<Bitset>& left_nbrs, int right_count);

// Hall certificate: a set S of left items with |N(S)| < |S|. Present exactly
// when the matching is not left-perfect.
struct HallViolation {
  std::vector<int> left_items;
  Bitset neighborhood;
};
std::optional<HallViolation> hall_violation(const std::vector<Bitset>& left_nbrs, int right_count);

}  // namespace gt
