#pragma once

#include "pgd/local_bijection.hpp"
#include "pgd/monomial.hpp"
#include "pgd/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace pgd {

/// Finitely supported map Monomial -> Rational with no zero coefficients.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c); // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {} // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(int var) { return Polynomial(Monomial::variable(var)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  /// Largest monomial in the built-in graded lex order; requires nonzero.
  const Monomial& max_monomial() const;
  /// Total degree (-1 for zero).
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  Terms terms_;
};

Polynomial pow(const Polynomial& p, int k);

/// Chain product, extended bilinearly.
Polynomial star_product(const Polynomial& p, const Polynomial& q);
/// e_d on the points of `on` (default: all of 0..n-1); throws DomainError unless 1 <= d <= n.
Polynomial elementary_symmetric(int d, PointSet on);
Polynomial elementary_symmetric(int d, int n);

Polynomial act(const LocalBijection& f, const Polynomial& p);
/// Graded basis action: kills every monomial whose support is not exactly dom f.
Polynomial act_graded(const LocalBijection& f, const Polynomial& p);

Polynomial partial(int var, const Polynomial& p);
/// D = sum_i d/dx_i over variables 0..n-1.
Polynomial derivation_D(const Polynomial& p, int n);
/// S_k = sum_i x_i^{k+1} d/dx_i over variables 0..n-1.
Polynomial steenrod(int k, const Polynomial& p, int n);

/// Terms in descending graded lex order, e.g. "3/2*x1^2*x2 - x3"; "0" for zero.
std::string to_string(const Polynomial& p);
/// Inverse of to_string; also accepts repeated factors and arbitrary term order.
Polynomial parse_polynomial(std::string_view text);

} // namespace pgd
