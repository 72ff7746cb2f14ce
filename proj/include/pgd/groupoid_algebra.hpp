#pragma once

#include "pgd/groupoid.hpp"
#include "pgd/polynomial.hpp"
#include "pgd/rational.hpp"

#include <map>

namespace pgd {

enum class Basis { Graded, Monoid };

/// An element of K.G written in either the graded basis {gr f} or the monoid basis {f}.
struct AlgebraElement {
  Basis basis = Basis::Monoid;
  std::map<LocalBijection, Rational> coefficients;

  void add(const LocalBijection& f, const Rational& c);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Throws DomainError if some support element is not in G.
void check_support(const PermutationGroupoid& g, const AlgebraElement& a);

/// f -> sum over A ⊆ dom f of gr f|_A.
AlgebraElement monoid_to_graded(const PermutationGroupoid& g, const AlgebraElement& a);
/// gr f -> sum over A ⊆ dom f of (-1)^{|dom f|-|A|} f|_A.
AlgebraElement graded_to_monoid(const PermutationGroupoid& g, const AlgebraElement& a);

/// Product in the basis of the operands (which must agree): gr f . gr g = gr(f∘g)
/// when im g = dom f and 0 otherwise; f . g = compose_monoid(f, g).
AlgebraElement multiply(const PermutationGroupoid& g, const AlgebraElement& a, const AlgebraElement& b);

/// Linear action on polynomials, graded or monoid according to the basis.
Polynomial act(const AlgebraElement& a, const Polynomial& p);

} // namespace pgd
