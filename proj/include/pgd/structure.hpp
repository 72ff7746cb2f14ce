#pragma once

#include "pgd/local_bijection.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace pgd {

using Tuple = std::vector<int>;
/// Subset of a relational structure's domain, bit i for element i (|E| <= 64).
using ElementSet = std::uint64_t;

inline constexpr int kDefaultGuard = 10;

struct Relation {
  std::string name;
  int arity = 0;
  std::vector<Tuple> tuples;
};

/// A finite relational structure (E, (rho_i)) with E = {0, ..., size-1}.
///
/// Tuples are deduplicated and sorted on construction; membership lookups
/// are hashed. Elements must be < 256 and arities <= 8.
class RelationalStructure {
public:
  RelationalStructure() = default;
  RelationalStructure(int size, std::vector<Relation> relations);

  int size() const { return size_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::vector<int> signature() const;

  bool holds(std::size_t relation, std::span<const int> tuple) const;

private:
  int size_ = 0;
  std::vector<Relation> relations_;
  std::vector<std::unordered_set<std::uint64_t>> lookup_;
};

std::uint64_t pack_tuple(std::span<const int> tuple);

/// Structure induced on `subset` (sorted), relabelled 0..|subset|-1 in order.
RelationalStructure induced(const RelationalStructure& r, std::span<const int> subset);
RelationalStructure induced(const RelationalStructure& r, ElementSet subset);

/// Exact isomorphism test by backtracking with signature and twin pruning.
/// Throws DomainError on signature mismatch and GuardExceeded above `guard`.
bool isomorphic(const RelationalStructure& a, const RelationalStructure& b, int guard = kDefaultGuard);

/// True if the transposition (x y) is an automorphism.
bool are_twins(const RelationalStructure& r, int x, int y);

/// Does f (a local bijection of the domain) preserve and reflect every relation?
bool is_local_isomorphism(const RelationalStructure& r, const LocalBijection& f);

/// All local isomorphisms, in canonical order. Guard applies to |E| (default 7).
std::vector<LocalBijection> local_isomorphisms(const RelationalStructure& r, int guard = 7);

/// Groups structures into isomorphism classes, keeping one representative per class.
class IsoClassifier {
public:
  explicit IsoClassifier(int guard = kDefaultGuard) : guard_(guard) {}
  /// Class id (dense, in order of first appearance).
  int classify(const RelationalStructure& s);
  int class_count() const { return static_cast<int>(reps_.size()); }

private:
  std::vector<std::int64_t> invariant(const RelationalStructure& s) const;

  int guard_;
  std::vector<RelationalStructure> reps_;
  std::map<std::vector<std::int64_t>, std::vector<int>> buckets_;
};

/// Number of isomorphism classes of n-element induced substructures.
long profile(const RelationalStructure& r, int n, int guard = kDefaultGuard);

/// Isomorphism-class label for every subset of E (indexed by bitmask); |E| <= 20.
std::vector<int> subset_iso_classes(const RelationalStructure& r, int guard = kDefaultGuard);

/// B is a monomorphic part if equal-size subsets agreeing outside B induce isomorphic structures.
bool is_monomorphic_part(const RelationalStructure& r, ElementSet part, int guard = kDefaultGuard);
ElementSet largest_monomorphic_part(const RelationalStructure& r, int x, int guard = kDefaultGuard);
/// Blocks R(x), each listed once, ordered by smallest element.
std::vector<ElementSet> canonical_decomposition(const RelationalStructure& r, int guard = kDefaultGuard);
bool is_monomorphic_decomposition(const RelationalStructure& r, std::span<const ElementSet> blocks,
                                  int guard = kDefaultGuard);

} // namespace pgd
