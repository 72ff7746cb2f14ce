#pragma once

#include "pgd/monomial.hpp"
#include "pgd/polynomial.hpp"
#include "pgd/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace pgd {

/// Finite subset of a ground set {0, ..., 63}, bit i for element i.
using Subset = std::uint64_t;

/// Finitely supported map from finite subsets to rationals.
class SetFunction {
public:
  using Values = std::map<Subset, Rational>;

  SetFunction() = default;
  static SetFunction unit(); // delta of the empty set
  static SetFunction indicator(Subset s, const Rational& value = 1);

  Rational operator()(Subset s) const;
  void add(Subset s, const Rational& v);
  const Values& values() const { return values_; }

  SetFunction& operator+=(const SetFunction& o);
  friend SetFunction operator*(const Rational& c, const SetFunction& f);
  friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
  Values values_;
};

/// (fg)(P) = sum over M ⊆ P of f(M) g(P \ M).
SetFunction cameron_product(const SetFunction& f, const SetFunction& g);

/// An equivalence on subsets given by a class label.
using Equivalence = std::function<std::int64_t(Subset)>;

/// Every pair of equivalent subsets of size <= bound has equal size and equal
/// multisets of one-point-deletion classes. Ground is {0..ground_size-1}.
bool is_hereditary(const Equivalence& eq, int ground_size, int bound);

/// f takes equal values on equivalent subsets of size <= bound.
bool is_invariant(const SetFunction& f, const Equivalence& eq, int ground_size, int bound);

/// |{(A, B) in a x b : A ∪ B = C, C ⊆ D, C in c}|.
long chi(const Equivalence& eq, std::int64_t a, std::int64_t b, std::int64_t c, Subset d);

/// d! times the indicator of subsets with trace d on the truncated ground X x {0..t-1},
/// element (i, c) stored as bit i*t + c.
SetFunction phi_embedding(const Monomial& m, int points, int truncation);
SetFunction phi_embedding(const Polynomial& p, int points, int truncation);

} // namespace pgd
