#pragma once

#include "pgd/groupoid.hpp"
#include "pgd/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgd {

/// numerator(Z) / prod_i (1 - Z^{n_i}) with integer numerator coefficients in increasing degree.
struct RationalSeries {
  std::vector<Integer> numerator;
  std::vector<int> denominator; // sorted exponents

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Coefficients of prod_i (1 - Z^{n_i}).
std::vector<Integer> expand_denominator(std::span<const int> den);
/// Drops trailing zero coefficients.
void trim(std::vector<Integer>& poly);
std::vector<Integer> multiply(std::span<const Integer> a, std::span<const Integer> b);

/// Coefficients of Z^0 .. Z^{count-1}.
std::vector<Integer> coefficients(const RationalSeries& s, int count);
Integer coefficient(const RationalSeries& s, int n);

/// Fits a numerator over `den` to the sequence `values`. The numerator may reach degree
/// deg(den) + extra; the remaining entries (at least `margin` of them) must be explained
/// exactly, otherwise FitError reports the first mismatching degree.
RationalSeries fit_series(std::span<const Integer> values, std::vector<int> den, int margin, int extra = 0);

/// Hilbert series of K[X]^G from orbit counts up to deg(den) + margin.
RationalSeries hilbert_series(const PermutationGroupoid& g, std::vector<int> den, int margin = 10);

/// The same series over another denominator, or nothing if the division is not exact.
std::optional<RationalSeries> rewrite_denominator(const RationalSeries& s, std::vector<int> den);

struct NonnegativityResult {
  std::optional<RationalSeries> found;
  long examined = 0;
};

/// Denominator multisets containing 1, of size <= max_factors and exponents <= max_exp,
/// in order of size, then exponent sum, then lexicographically; stops at the first
/// rewrite with a non-negative numerator.
NonnegativityResult nonnegativity_search(const RationalSeries& s, int max_factors, int max_exp);

/// value(n) = polys[n mod period](n) for n >= threshold; polys hold coefficients of n^0, n^1, ...
struct QuasiPolynomial {
  int period = 1;
  std::vector<std::vector<Rational>> polys;
  long threshold = 0;

  Rational evaluate(long n) const;
};

/// Interpolates per residue class modulo lcm(den) and verifies 50 further values.
QuasiPolynomial quasi_polynomial(const RationalSeries& s);

/// Orbit counts per fine degree r <= bound (componentwise), including zero entries.
std::map<std::vector<int>, long> fine_hilbert_table(const PermutationGroupoid& g, const std::vector<int>& bound);

/// "1+Z+2Z^2 / (1-Z)(1-Z^2)".
std::string to_string(const RationalSeries& s);
std::string to_string(const QuasiPolynomial& q);
std::string polynomial_in_z(std::span<const Integer> coeffs);

} // namespace pgd
