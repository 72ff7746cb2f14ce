#pragma once

#include "pgd/groupoid.hpp"
#include "pgd/linalg.hpp"
#include "pgd/polynomial.hpp"
#include "pgd/rational.hpp"
#include "pgd/term_order.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pgd {

/// Orbit of the strict-chain monomial x_{S_1} ... x_{S_k}, S_1 ⊊ ... ⊊ S_k.
struct ChainGenerator {
  std::vector<PointSet> chain; // smallest first, for the leading member
  Monomial monomial;           // leading member under shape-then-lex
  Polynomial orbit_sum;
  int degree = 0;
  std::uint32_t sizes = 0; // bit s-1 set when a layer of size s occurs
};

/// One generator per orbit of strict-chain monomials, by degree then leading monomial (descending).
std::vector<ChainGenerator> chain_generators(const PermutationGroupoid& g);

/// Basis of the degree-k part of the ring generated by e_{c,j} over the given
/// components c (products of elementary symmetric polynomials).
std::vector<Polynomial> sym_basis(const std::vector<PointSet>& components, int k);

/// prod over components of |c|! divided by |G(X,X)|.
Integer predicted_rank(const PermutationGroupoid& g);

struct FreenessReport {
  int free_up_to = -1;
  std::vector<int> generator_degrees;
  std::vector<Polynomial> generators;
  std::optional<int> first_syzygy_degree;
  Integer predicted_rank;
};

/// Degree-by-degree generator selection over the component-wise symmetric ring.
FreenessReport truncated_freeness(const PermutationGroupoid& g, int dmax);

/// Per degree n <= dmax: does Sym'·family span K[X]^G_n, and is it free (no relation)?
struct FamilyCheck {
  std::optional<int> first_non_spanning;
  std::optional<int> first_relation;
  bool basis_up_to_dmax() const { return !first_non_spanning && !first_relation; }
};
FamilyCheck check_module_family(const PermutationGroupoid& g, const std::vector<Polynomial>& family, int dmax,
                                bool component_sym = true);

struct IncidenceResult {
  Matrix matrix;
  std::vector<Monomial> flag_columns; // largest flag monomial of each G(X,X)-orbit of flags
  bool invertible = false;
};

/// Rows: family; columns: flag orbits; entry = coefficient of the column's flag monomial
/// in g ★ (★ of e_j over the layer sizes j missing from g's chain).
IncidenceResult incidence_matrix_freeness(const PermutationGroupoid& g, const std::vector<ChainGenerator>& family);

/// Number of basis elements each set of layer sizes must contribute if (K[X]^G, ★) is free,
/// by Möbius inversion of the strict-chain orbit counts. Indexed by size-set bitmask.
std::map<std::uint32_t, long> predicted_fine_multiplicities(const PermutationGroupoid& g);

struct FamilySearchResult {
  std::optional<std::vector<ChainGenerator>> family;
  long examined = 0;
  bool negative_multiplicity = false;
  bool limit_reached = false;
};
/// Families of chain generators with the predicted fine multiplicities, tried until one
/// gives an invertible incidence matrix.
FamilySearchResult search_incidence_family(const PermutationGroupoid& g, long limit = 200000);

/// Finite SAGBI basis exists iff the reflection criterion holds.
bool sagbi_finite(const PermutationGroupoid& g, const TermOrder& order);

/// Irreducible initial monomials of invariants per degree (empirical up to dmax).
std::map<int, std::vector<Monomial>> initial_monoid_explorer(const PermutationGroupoid& g, const TermOrder& order,
                                                             int dmax);

/// Number of new algebra generators needed per degree 0..dmax, for the ordinary
/// product or for ★.
std::vector<long> algebra_generator_counts(const PermutationGroupoid& g, int dmax, bool star);

} // namespace pgd
