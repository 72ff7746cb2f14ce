#pragma once

#include "pgd/local_bijection.hpp"
#include "pgd/point_set.hpp"

#include <compare>
#include <optional>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgd {

/// x^d as a sparse list of (variable, positive exponent), sorted by variable.
///
/// The built-in ordering is graded lexicographic with x_0 > x_1 > ...; it is
/// the storage order of Polynomial, independent of any TermOrder.
class Monomial {
public:
  using Entry = std::pair<int, int>;

  Monomial() = default;
  static Monomial variable(int var, int exp = 1);
  /// Dense exponent vector; zeros are dropped.
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial square_free(PointSet s);

  const std::vector<Entry>& entries() const { return entries_; }
  int degree() const { return degree_; }
  int exponent(int var) const;
  bool is_one() const { return entries_.empty(); }
  PointSet support() const;
  /// Largest variable index with nonzero exponent, or -1.
  int max_variable() const { return entries_.empty() ? -1 : entries_.back().first; }
  std::vector<int> exponents(int n) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// The monoid action: x_i -> x_{f(i)} when support ⊆ dom f, otherwise nothing.
std::optional<Monomial> act(const LocalBijection& f, const Monomial& m);

/// All monomials of degree `degree` in variables 0..n-1, ascending canonical order.
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// Layers S_1 ⊇ S_2 ⊇ ... with S_j = {i : d_i >= j}, returned smallest first.
struct ChainDecomposition {
  struct Layer {
    PointSet set;
    int multiplicity = 0;
  };
  std::vector<Layer> layers;
};

ChainDecomposition chain_decompose(const Monomial& m);
Monomial reconstruct(const ChainDecomposition& c);
/// r_s = number of layers (with repetition) of size s, s = 1..n.
std::vector<int> fine_degree(const Monomial& m, int n);
/// x_{S_1} ... x_{S_k}; the sets need not be nested.
Monomial chain_monomial(std::span<const PointSet> sets);
/// Product when the layers of a and b nest into one multichain, otherwise nothing.
std::optional<Monomial> star_product(const Monomial& a, const Monomial& b);

/// "x1^2*x3" (variables numbered from 1), "1" for the empty monomial.
std::string to_string(const Monomial& m);

} // namespace pgd
