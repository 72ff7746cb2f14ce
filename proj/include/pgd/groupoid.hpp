#pragma once

#include "pgd/local_bijection.hpp"
#include "pgd/structure.hpp"

#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pgd {

/// A permutation groupoid on X = {0, ..., n-1}, stored extensionally.
///
/// Elements are kept in canonical order and indexed by domain so that the
/// partial action on monomials only ever touches applicable maps.
class PermutationGroupoid {
public:
  PermutationGroupoid() = default;

  int ground_size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<LocalBijection>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const LocalBijection& f) const { return members_.count(f) != 0; }
  /// Elements whose domain is exactly `domain`.
  std::span<const LocalBijection> with_domain(PointSet domain) const;

  friend bool operator==(const PermutationGroupoid& a, const PermutationGroupoid& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

  /// Wraps an element set that is already closed; no closure is performed.
  static PermutationGroupoid from_closed(int n, std::vector<LocalBijection> elements,
                                         std::vector<std::string> labels = {});

private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<LocalBijection> elements_;
  std::unordered_set<LocalBijection, LocalBijectionHash> members_;
  std::vector<LocalBijection> by_domain_;
  std::unordered_map<std::uint32_t, std::pair<std::size_t, std::size_t>> domain_ranges_;
};

std::vector<std::string> default_labels(int n);

/// Smallest permutation groupoid on n points containing the generators and id_X.
PermutationGroupoid close(std::span<const LocalBijection> generators, int n,
                          std::vector<std::string> labels = {});

/// Exhaustive check of the groupoid axioms on an explicit element set.
bool satisfies_groupoid_axioms(std::span<const LocalBijection> elements, int n);

/// G(X, X): the rank-|X| elements, in canonical order.
std::vector<LocalBijection> underlying_group(const PermutationGroupoid& g);
bool comes_from_group(const PermutationGroupoid& g);

/// Elements with domain and image inside `subset`, relabelled onto 0..|subset|-1.
PermutationGroupoid restrict(const PermutationGroupoid& g, PointSet subset);

/// True iff G comes from a permutation group generated by its transpositions.
bool reflection_criterion(const PermutationGroupoid& g);

/// Transitive components of the partial action on points, ordered by smallest point.
std::vector<PointSet> transitive_components(const PermutationGroupoid& g);

// Named groupoids used throughout the fixtures.
PermutationGroupoid full_local_bijections(int n);
PermutationGroupoid increasing_groupoid(int n);
PermutationGroupoid staircase_groupoid(int n);
PermutationGroupoid from_permutations(std::span<const std::vector<int>> generators, int n);

/// A structure R_G on X whose local isomorphisms are exactly G: one relation
/// per G-orbit of injective k-tuples, 1 <= k <= |X|. Guard on |X| (default 7).
RelationalStructure to_relational_structure(const PermutationGroupoid& g, int guard = 7);

} // namespace pgd
