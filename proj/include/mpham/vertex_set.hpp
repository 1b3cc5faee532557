#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "mpham/errors.hpp"

namespace mpham {

inline constexpr int kMaxVertices = 64;

// A set of vertex ids in [0, 64), stored as one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static VertexSet range(int n) {
    check_id(n == 0 ? 0 : n - 1);
    return VertexSet(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  template <typename Range>
  static VertexSet from(const Range& ids) {
    VertexSet s;
    for (int v : ids) s.insert(v);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0; }
  void insert(int v) {
    check_id(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    check_id(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  int highest() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  static void check_id(int v) {
    if (v < 0 || v >= kMaxVertices)
      throw InvalidArguments("vertex id " + std::to_string(v) + " outside [0, " +
                             std::to_string(kMaxVertices) + ")");
  }

  std::uint64_t bits_ = 0;
};

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Visits every k-subset of `universe` in colexicographic order of the
// rank-compressed bit pattern; stops early when `visit` returns false.
template <typename Visit>
bool for_each_subset_of_size(VertexSet universe, int k, Visit&& visit) {
  const std::vector<int> ids = universe.to_vector();
  const int m = static_cast<int>(ids.size());
  if (k < 0 || k > m) return true;
  if (k == 0) return visit(VertexSet{});
  std::uint64_t pattern = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit_bit = (m == 64) ? 0 : (std::uint64_t{1} << m);
  while (true) {
    std::uint64_t real = 0;
    for (std::uint64_t p = pattern; p != 0; p &= p - 1) real |= std::uint64_t{1} << ids[std::countr_zero(p)];
    if (!visit(VertexSet(real))) return false;
    // Gosper's hack
    const std::uint64_t c = pattern & (~pattern + 1);
    const std::uint64_t r = pattern + c;
    if (r == 0 || (limit_bit != 0 && r >= limit_bit)) return true;
    pattern = (((r ^ pattern) >> 2) / c) | r;
    if (limit_bit != 0 && pattern >= limit_bit) return true;
  }
}

}  // namespace mpham
