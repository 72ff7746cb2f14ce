#pragma once

#include "pgd/series.hpp"
#include "pgd/structure.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgd {

/// Blow-up of a quotient structure Q on components 0..k-1.
///
/// Component i is replaced by m_i copies (nullopt = unbounded). A quotient
/// tuple (i_1, ..., i_r) lifts to every tuple of pairwise distinct elements
/// (i_1, c_1), ..., (i_r, c_r). With `block_equivalence` the binary relation
/// "equiv" relates distinct elements of the same component.
struct LayeredStructure {
  RelationalStructure quotient;
  std::vector<std::optional<int>> multiplicities;
  bool block_equivalence = true;

  int component_count() const { return quotient.size(); }
  int unbounded_count() const;
  /// Throws DomainError if multiplicities do not match the quotient.
  void validate() const;
};

/// Finite realization with sizes[i] elements in component i, ordered by component then copy.
RelationalStructure realize(const LayeredStructure& l, std::span<const int> sizes);

/// Canonical form of a structure whose elements split into known twin blocks
/// (each block's elements pairwise twins). Equal forms iff isomorphic.
std::vector<std::int64_t> twin_canonical_form(const RelationalStructure& r, std::span<const int> block_of);

/// Trace vectors d with sum n and d_i <= m_i.
std::vector<std::vector<int>> trace_vectors(const LayeredStructure& l, int n);

/// Canonical form of the realization with trace vector d.
std::vector<std::int64_t> trace_form(const LayeredStructure& l, std::span<const int> d);

/// phi(n) for n = 0..upto; `jobs` worker threads per degree.
std::vector<long> profile_layered_values(const LayeredStructure& l, int upto, int jobs = 1);
long profile_layered(const LayeredStructure& l, int n, int jobs = 1);

/// Fit over (1-Z)(1-Z^2)...(1-Z^k), k = number of unbounded components. The numerator
/// may exceed the denominator degree by the finite multiplicities plus (arity - 1) * k;
/// `margin` further values are checked and FitError is thrown on disagreement.
RationalSeries profile_series(const LayeredStructure& l, int margin = 10, int jobs = 1);

struct AddLayerReport {
  bool ok = true;
  long checked = 0;
  std::string violation;
};

/// For each leading monomial m of degree <= dmax and each layer S of m, either some
/// component of S is exhausted or m x_S is again leading.
AddLayerReport check_addlayer(const LayeredStructure& l, int dmax);

} // namespace pgd
