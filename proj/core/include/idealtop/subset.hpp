#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace idealtop {

/// Maximum number of points any space may carry.
inline constexpr int kMaxPoints = 16;

using Point = int;

/// Characteristic vector of a subset of {0, ..., n-1}; point i is bit i.
///
/// The mask does not know its ground-set size. Operations that need one
/// (complement, validation) take it explicitly.
class SubsetMask {
 public:
  using Bits = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Bits bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<Point> points) {
    SubsetMask m;
    for (Point p : points) m.bits_ |= Bits{1} << p;
    return m;
  }
  static SubsetMask of(const std::vector<Point>& points) {
    SubsetMask m;
    for (Point p : points) m.bits_ |= Bits{1} << p;
    return m;
  }
  static constexpr SubsetMask singleton(Point p) { return SubsetMask(Bits{1} << p); }
  static constexpr SubsetMask full(int n) { return SubsetMask((Bits{1} << n) - 1); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool has(Point p) const { return (bits_ >> p) & 1U; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }
  /// True when no bit at or above n is set.
  constexpr bool fits(int n) const { return (bits_ >> n) == 0; }
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full(n).bits_); }
  constexpr Point lowest() const { return std::countr_zero(bits_); }

  constexpr SubsetMask with(Point p) const { return SubsetMask(bits_ | (Bits{1} << p)); }
  constexpr SubsetMask without(Point p) const { return SubsetMask(bits_ & ~(Bits{1} << p)); }

  std::vector<Point> points() const {
    std::vector<Point> out;
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) { return a.bits_ <=> b.bits_; }

 private:
  Bits bits_ = 0;
};

/// Number of subsets of an n-point set.
constexpr std::uint32_t subset_count(int n) { return std::uint32_t{1} << n; }

/// Calls fn(SubsetMask) for every subset of an n-point set, ascending by mask.
template <class Fn>
void for_each_subset(int n, Fn&& fn) {
  const std::uint32_t total = subset_count(n);
  for (std::uint32_t b = 0; b < total; ++b) fn(SubsetMask(b));
}

}  // namespace idealtop
