#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace ocpkit {

/// Canonical subset of poset elements, backed by a 64-bit mask.
///
/// Bit i set means element i is a member. Set equality is representation
/// equality, and the numeric order of the mask is the canonical enumeration
/// order (a strict submask is always numerically smaller).
class element_set {
public:
  static constexpr int capacity = 64;

  constexpr element_set() = default;

  static constexpr element_set from_bits(std::uint64_t bits) { return element_set(bits); }
  static constexpr element_set single(int i) { return element_set(std::uint64_t{1} << i); }
  /// The set {0, 1, ..., n-1}.
  static constexpr element_set first_n(int n) {
    return element_set(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(element_set o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(element_set o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(element_set o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr element_set operator|(element_set a, element_set b) {
    return element_set(a.bits_ | b.bits_);
  }
  friend constexpr element_set operator&(element_set a, element_set b) {
    return element_set(a.bits_ & b.bits_);
  }
  /// Set difference a \ b.
  friend constexpr element_set operator-(element_set a, element_set b) {
    return element_set(a.bits_ & ~b.bits_);
  }
  /// Symmetric difference.
  friend constexpr element_set operator^(element_set a, element_set b) {
    return element_set(a.bits_ ^ b.bits_);
  }
  constexpr element_set& operator|=(element_set o) { bits_ |= o.bits_; return *this; }
  constexpr element_set& operator&=(element_set o) { bits_ &= o.bits_; return *this; }
  constexpr element_set& operator-=(element_set o) { bits_ &= ~o.bits_; return *this; }
  constexpr element_set& operator^=(element_set o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(element_set, element_set) = default;
  friend constexpr auto operator<=>(element_set a, element_set b) {
    return a.bits_ <=> b.bits_;
  }

  /// Forward iteration over members in ascending element order.
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  /// Lowest member; only valid on a nonempty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i : *this) out.push_back(i);
    return out;
  }

private:
  constexpr explicit element_set(std::uint64_t b) : bits_(b) {}

  std::uint64_t bits_ = 0;
};

/// "{0,2,5}" style rendering, members ascending.
std::string to_string(element_set s);

} // namespace ocpkit
