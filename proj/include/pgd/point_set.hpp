#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace pgd {

/// A subset of a small ground set {0, ..., n-1}, n <= 32, as a bitmask.
class PointSet {
public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr PointSet full(int n) {
    return PointSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr PointSet singleton(int p) { return PointSet(1u << p); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr PointSet with(int p) const { return PointSet(bits_ | (1u << p)); }
  constexpr PointSet without(int p) const { return PointSet(bits_ & ~(1u << p)); }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

  /// Points in increasing order.
  std::vector<int> points() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F> void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b; b &= b - 1)
      f(std::countr_zero(b));
  }

private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `s` (including empty and s itself), in increasing bitmask order.
inline std::vector<PointSet> subsets_of(PointSet s) {
  std::vector<PointSet> out;
  std::uint32_t m = s.bits();
  std::uint32_t sub = 0;
  do {
    out.emplace_back(sub);
    sub = (sub - m) & m;
  } while (sub != 0);
  return out;
}

} // namespace pgd
