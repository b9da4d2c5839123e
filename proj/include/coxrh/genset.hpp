#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <initializer_list>
#include <string>

namespace coxrh {

/// Subset of generator indices {0,...,n-1}, n <= 24, as a bit set.
class GenSet {
 public:
  constexpr GenSet() = default;

  static constexpr GenSet from_mask(std::uint32_t mask) { return GenSet(mask); }

  static GenSet of(std::initializer_list<int> indices) {
    GenSet s;
    for (int i : indices) s.add(i);
    return s;
  }

  /// {0,...,n-1}.
  static constexpr GenSet full(int n) {
    return GenSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }

  void add(int i) { bits_ |= std::uint32_t{1} << i; }
  void remove(int i) { bits_ &= ~(std::uint32_t{1} << i); }

  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  constexpr GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
  constexpr GenSet operator-(GenSet o) const { return GenSet(bits_ & ~o.bits_); }
  GenSet& operator|=(GenSet o) { bits_ |= o.bits_; return *this; }
  GenSet& operator&=(GenSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(GenSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr bool operator==(const GenSet&) const = default;
  constexpr bool operator<(GenSet o) const { return bits_ < o.bits_; }

  /// Iterates over the set indices in increasing order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : *this) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  constexpr explicit GenSet(std::uint32_t mask) : bits_(mask) {}

  std::uint32_t bits_ = 0;
};

}  // namespace coxrh
