#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace wsel {

/// Largest ground set representable by a PointSet.
inline constexpr int kMaxPoints = 64;

/// A subset of {0, ..., 63} stored as a bit mask.
class PointSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr PointSet() = default;
  constexpr PointSet(std::initializer_list<int> points) {
    for (int p : points) bits_ |= bit(p);
  }

  static constexpr PointSet from_bits(std::uint64_t bits) {
    PointSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr PointSet single(int x) { return from_bits(bit(x)); }
  /// {0, ..., n-1}
  static constexpr PointSet full(int n) {
    return from_bits(n >= kMaxPoints ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr PointSet& insert(int x) {
    bits_ |= bit(x);
    return *this;
  }
  constexpr PointSet& erase(int x) {
    bits_ &= ~bit(x);
    return *this;
  }

  constexpr PointSet operator|(PointSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

 private:
  static constexpr std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

  std::uint64_t bits_ = 0;
};

/// A partition stored as classes; callers order classes as documented per use.
using Partition = std::vector<PointSet>;

}  // namespace wsel
