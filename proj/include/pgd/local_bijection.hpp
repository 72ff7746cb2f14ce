#pragma once

#include "pgd/point_set.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgd {

/// A bijection between two subsets of the ground set {0, ..., n-1}.
///
/// Ordering is canonical: by rank, then by the sorted domain (as a
/// lexicographic point list), then by the images in domain order. Every
/// listing in the library follows it.
class LocalBijection {
public:
  static constexpr int kMaxPoints = 16;

  LocalBijection() { img_.fill(-1); }
  explicit LocalBijection(int ground_size);

  /// Throws DomainError on a point outside [0, n) or a non-injective map.
  static LocalBijection from_pairs(int ground_size, std::span<const std::pair<int, int>> pairs);
  static LocalBijection identity(int ground_size, PointSet on);
  static LocalBijection identity(int ground_size) {
    return identity(ground_size, PointSet::full(ground_size));
  }
  /// Permutation given in one-line notation: perm[i] is the image of i.
  static LocalBijection permutation(std::span<const int> perm);

  int ground_size() const { return n_; }
  PointSet domain() const { return dom_; }
  PointSet image() const { return im_; }
  int rank() const { return dom_.size(); }
  bool is_permutation() const { return rank() == n_; }
  bool is_identity() const;

  bool defined_at(int p) const { return dom_.contains(p); }
  int operator()(int p) const { return img_[p]; }

  LocalBijection inverse() const;
  /// Restriction to a subset of the domain.
  LocalBijection restricted_to(PointSet subset) const;
  /// Image of a point set contained in the domain.
  PointSet apply(PointSet s) const;

  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const LocalBijection& a, const LocalBijection& b) {
    return a.n_ == b.n_ && a.dom_ == b.dom_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const LocalBijection& a, const LocalBijection& b);

  std::size_t hash() const;

private:
  std::uint8_t n_ = 0;
  PointSet dom_;
  PointSet im_;
  std::array<std::int8_t, kMaxPoints> img_;
};

/// Composition f∘g, defined only when im g = dom f; throws DomainError otherwise.
LocalBijection compose(const LocalBijection& f, const LocalBijection& g);

/// Extended composition: f∘g on the largest domain where f(g(x)) is defined.
LocalBijection compose_monoid(const LocalBijection& f, const LocalBijection& g);

/// "{1->2, 3->3}" using the given point labels; "{}" for the empty map.
std::string to_string(const LocalBijection& f, std::span<const std::string> labels);
std::string to_string(const LocalBijection& f);

struct LocalBijectionHash {
  std::size_t operator()(const LocalBijection& f) const { return f.hash(); }
};

} // namespace pgd
