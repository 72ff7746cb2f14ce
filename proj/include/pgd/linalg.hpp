#pragma once

#include "pgd/polynomial.hpp"
#include "pgd/rational.hpp"

#include <map>
#include <vector>

namespace pgd {

/// Incrementally built row-echelon basis of a space of polynomials.
///
/// Pivots are the largest monomials (built-in graded lex order); each stored
/// row is normalized to pivot coefficient 1.
class EchelonBasis {
public:
  /// Residue of p modulo the current span.
  Polynomial reduce(Polynomial p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  /// Adds p; returns false if it was already in the span.
  bool insert(const Polynomial& p);
  std::size_t rank() const { return rows_.size(); }

private:
  std::map<Monomial, Polynomial> rows_;
};

using Matrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);
bool is_invertible(const Matrix& m);

} // namespace pgd
