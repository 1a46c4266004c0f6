#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gt {

// Fixed-universe bitmask. Used for vertex sets and color sets alike; the
// universe size is pinned at construction and all binary operations require
// matching universes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
  }

  static Bitset full(int universe) {
    Bitset b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }
  static Bitset of(int universe, std::initializer_list<int> items) {
    Bitset b(universe);
    for (int i : items) b.set(i);
    return b;
  }
  static Bitset of(int universe, const std::vector<int>& items) {
    Bitset b(universe);
    for (int i : items) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  void set(int i) { words_[check(i) >> 6] |= word(i); }
  void reset(int i) { words_[check(i) >> 6] &= ~word(i); }
  bool test(int i) const { return (words_[check(i) >> 6] & word(i)) != 0; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  // -1 when exhausted.
  int first() const { return next(-1); }
  int next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] & (~0ULL << (start & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> items() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool subset_of(const Bitset& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  int intersection_count(const Bitset& o) const {
    match(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  std::string str() const {
    std::string s = "{";
    bool sep = false;
    for (int i = first(); i >= 0; i = next(i)) {
      if (sep) s += ",";
      s += std::to_string(i);
      sep = true;
    }
    return s + "}";
  }

 private:
  int check(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("Bitset: index " + std::to_string(i));
    return i;
  }
  void match(const Bitset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Bitset: universe mismatch");
  }
  static std::uint64_t word(int i) { return 1ULL << (i & 63); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;
using ColorSet = Bitset;

}  // namespace gt
