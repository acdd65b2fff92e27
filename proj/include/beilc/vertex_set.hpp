#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace beilc {

/// Vertex labels are 1-based, as in the input formats.
using Vertex = unsigned;

/// Largest vertex count representable by a VertexSet.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertices from 1..64, stored as a bit mask (bit v-1 <=> vertex v).
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {1, ..., n}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_vector(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex min() const { return static_cast<Vertex>(std::countr_zero(bits_)) + 1; }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on the sorted element lists ({1,2} < {1,3} < {2}).
  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    while (!a.empty() && !b.empty()) {
      if (a.min() != b.min()) return a.min() <=> b.min();
      a.erase(a.min());
      b.erase(b.min());
    }
    return a.size() <=> b.size();
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,2,5}"
std::string to_string(VertexSet s);

}  // namespace beilc
