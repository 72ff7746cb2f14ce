#pragma once

#include "pgd/groupoid.hpp"
#include "pgd/groupoid_algebra.hpp"
#include "pgd/polynomial.hpp"
#include "pgd/term_order.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pgd {

struct MonomialOrbit {
  std::vector<Monomial> members; // ascending built-in order
  Monomial leading;
};

MonomialOrbit orbit(const PermutationGroupoid& g, const Monomial& m,
                    const TermOrder& order = TermOrder::shape_then_lex());
Polynomial orbit_sum(const MonomialOrbit& o);
/// Orbit sum of the orbit through m.
Polynomial orbit_sum(const PermutationGroupoid& g, const Monomial& m);

/// Orbits of degree-n monomials, sorted by leading monomial, largest first.
std::vector<MonomialOrbit> orbits_of_degree(const PermutationGroupoid& g, int n,
                                            const TermOrder& order = TermOrder::shape_then_lex());
std::vector<Polynomial> orbit_sums_of_degree(const PermutationGroupoid& g, int n,
                                             const TermOrder& order = TermOrder::shape_then_lex());
/// dim K[X]^G_n.
long orbit_count(const PermutationGroupoid& g, int n);

/// Equal coefficients along every orbit.
bool is_invariant(const PermutationGroupoid& g, const Polynomial& p);
/// Coefficients of an invariant polynomial in the orbit-sum basis, keyed by leading monomial.
std::map<Monomial, Rational> orbit_coordinates(const PermutationGroupoid& g, const Polynomial& p,
                                               const TermOrder& order = TermOrder::shape_then_lex());
/// Expansion of a*b in the orbit-sum basis; throws DomainError unless both are invariant.
std::map<Monomial, Rational> product_in_orbit_basis(const PermutationGroupoid& g, const Polynomial& a,
                                                    const Polynomial& b,
                                                    const TermOrder& order = TermOrder::shape_then_lex());

/// R = sum over A ⊆ X of (1/|G_A|) sum_{dom g = A} gr g, where G_A = {g : dom g = A}.
class ReynoldsOperator {
public:
  explicit ReynoldsOperator(const PermutationGroupoid& g);
  const AlgebraElement& element() const { return element_; }
  Polynomial apply(const Polynomial& p) const;

private:
  const PermutationGroupoid* g_;
  AlgebraElement element_;
};

ReynoldsOperator reynolds(const PermutationGroupoid& g);

/// A polynomial together with the image that breaks the tested property.
struct Witness {
  std::string description;
  Polynomial input;
  Polynomial output;
};

/// First (e_d, p) with R(e_d p) != e_d R(p), p a monomial of degree <= dmax.
std::optional<Witness> sym_morphism_witness(const PermutationGroupoid& g, int dmax);
bool reynolds_is_sym_morphism(const PermutationGroupoid& g, int dmax);

/// First orbit sum of degree <= dmax whose image under D (resp. S_k) is not invariant.
std::optional<Witness> derivation_witness(const PermutationGroupoid& g, int dmax);
std::optional<Witness> steenrod_witness(const PermutationGroupoid& g, int k, int dmax);

} // namespace pgd
