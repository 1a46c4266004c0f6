#include "gt/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace gt {

IncrementalMatcher::IncrementalMatcher(int right_count)
    : right_count_(right_count), match_right_(right_count, -1) {}

bool IncrementalMatcher::augment(int l, std::vector<char>& visited) {
  ++augment_steps_;
  const Bitset& nb = nbrs_[l];
  for (int r = nb.first(); r >= 0; r = nb.next(r)) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right_[r] < 0 || augment(match_right_[r], visited)) {
      trail_.back().push_back(r);
      match_right_[r] = l;
      match_left_[l] = r;
      return true;
    }
  }
  return false;
}

bool IncrementalMatcher::push(const Bitset& right_nbrs) {
  if (right_nbrs.universe() != right_count_)
    throw std::invalid_argument("IncrementalMatcher: universe mismatch");
  nbrs_.push_back(right_nbrs);
  match_left_.push_back(-1);
  trail_.emplace_back();
  std::vector<char> visited(right_count_, 0);
  if (augment(left_count() - 1, visited)) return true;
  nbrs_.pop_back();
  match_left_.pop_back();
  trail_.pop_back();
  return false;
}

void IncrementalMatcher::pop() {
  if (nbrs_.empty()) throw std::logic_error("IncrementalMatcher: pop on empty");
  // Replay the augmenting path of this push in reverse: each touched right
  // item goes back to the left item it served before, shifting along the
  // path until the final right item becomes free again.
  const std::vector<int>& path = trail_.back();
  for (std::size_t i = path.size(); i-- > 0;) {
    int r = path[i];
    if (i == 0) {
      match_right_[r] = -1;
    } else {
      match_right_[r] = match_right_[path[i - 1]];
      match_left_[match_right_[r]] = r;
    }
  }
  nbrs_.pop_back();
  match_left_.pop_back();
  trail_.pop_back();
}

std::vector<int> max_bipartite_matching(const std::vector<Bitset>& left_nbrs, int right_count) {
  std::vector<int> match_left(left_nbrs.size(), -1);
  std::vector<int> match_right(right_count, -1);

  // Kuhn's algorithm; iterative order is fixed, so results are deterministic.
  std::vector<char> visited(right_count, 0);
  auto augment = [&](auto&& self, int l) -> bool {
    for (int r = left_nbrs[l].first(); r >= 0; r = left_nbrs[l].next(r)) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || self(self, match_right[r])) {
        match_right[r] = l;
        match_left[l] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < left_nbrs.size(); ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, static_cast<int>(l));
  }
  return match_left;
}

std::optional<HallViolation> hall_violation(const std::vector<Bitset>& left_nbrs, int right_count) {
  std::vector<int> match_left = max_bipartite_matching(left_nbrs, right_count);
  std::vector<int> match_right(right_count, -1);
  for (std::size_t l = 0; l < match_left.size(); ++l)
    if (match_left[l] >= 0) match_right[match_left[l]] = static_cast<int>(l);

  int deficient = -1;
  for (std::size_t l = 0; l < match_left.size(); ++l)
    if (match_left[l] < 0) {
      deficient = static_cast<int>(l);
      break;
    }
  if (deficient < 0) return std::nullopt;

  // Alternating reachability from the unmatched left item: the reachable
  // left items S satisfy |N(S)| = |S| - 1.
  Bitset reached_right(right_count);
  std::vector<int> stack{deficient};
  std::vector<char> in_s(left_nbrs.size(), 0);
  in_s[deficient] = 1;
  std::vector<int> s_items{deficient};
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r = left_nbrs[l].first(); r >= 0; r = left_nbrs[l].next(r)) {
      if (reached_right.test(r)) continue;
      reached_right.set(r);
      int l2 = match_right[r];
      if (l2 >= 0 && !in_s[l2]) {
        in_s[l2] = 1;
        s_items.push_back(l2);
        stack.push_back(l2);
      }
    }
  }
  std::sort(s_items.begin(), s_items.end());
  return HallViolation{std::move(s_items), std::move(reached_right)};
}

}  // namespace gt
