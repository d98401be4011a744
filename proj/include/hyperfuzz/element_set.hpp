#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace hyperfuzz {

/// Largest carrier this library handles. Sets are 16-bit masks and the
/// exhaustive sweeps are O(n^3) and worse, so anything bigger would not
/// be usable anyway.
inline constexpr int kMaxCarrierSize = 16;

/// Index of a carrier member. Display names live on the HyperGroupoid.
struct Element {
  int index = 0;
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// A subset of a carrier, stored as a bitmask in element-index order.
/// The canonical representation makes set equality plain value equality.
class ElementSet {
public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint32_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet single(Element e) { return from_bits(1u << e.index); }
  static constexpr ElementSet full(int n) {
    return from_bits(n >= 32 ? ~0u : (1u << n) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> e.index) & 1u; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ElementSet& insert(Element e) {
    bits_ |= 1u << e.index;
    return *this;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Iterates members in ascending index order.
  class iterator {
  public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return Element{std::countr_zero(rest_)}; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(const iterator&, const iterator&) = default;

  private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  std::uint32_t bits_ = 0;
};

/// The elements 0..n-1 of a carrier, as a range of Element.
class ElementRange {
public:
  constexpr explicit ElementRange(int n) : n_(n) {}

  class iterator {
  public:
    constexpr explicit iterator(int i) : i_(i) {}
    constexpr Element operator*() const { return Element{i_}; }
    constexpr iterator& operator++() {
      ++i_;
      return *this;
    }
    friend constexpr bool operator==(const iterator&, const iterator&) = default;

  private:
    int i_;
  };
  constexpr iterator begin() const { return iterator(0); }
  constexpr iterator end() const { return iterator(n_); }

private:
  int n_;
};

}  // namespace hyperfuzz
