#pragma once

#include "pgd/monomial.hpp"
#include "pgd/polynomial.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace pgd {

enum class OrderKind { Lex, DegRevLex, ShapeThenLex };

/// A monomial order over a ranking of the variables.
///
/// `ranking` lists variables from largest to smallest; variables it omits
/// come after it in index order. ShapeThenLex compares the decreasingly
/// sorted exponent vectors by degrevlex and breaks ties by lex.
class TermOrder {
public:
  explicit TermOrder(OrderKind kind = OrderKind::ShapeThenLex, std::vector<int> ranking = {});

  static TermOrder lex(std::vector<int> ranking = {}) { return TermOrder(OrderKind::Lex, std::move(ranking)); }
  static TermOrder degrevlex(std::vector<int> ranking = {}) {
    return TermOrder(OrderKind::DegRevLex, std::move(ranking));
  }
  static TermOrder shape_then_lex(std::vector<int> ranking = {}) {
    return TermOrder(OrderKind::ShapeThenLex, std::move(ranking));
  }
  /// "lex", "degrevlex" or "shape".
  static TermOrder parse(const std::string& name);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& ranking() const { return ranking_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  Monomial max(std::span<const Monomial> ms) const;
  /// Largest monomial of a nonzero polynomial.
  Monomial leading_monomial(const Polynomial& p) const;

private:
  std::vector<int> ranked_exponents(const Monomial& m, int width) const;
  std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) const;

  OrderKind kind_;
  std::vector<int> ranking_;
};

std::string to_string(OrderKind kind);

} // namespace pgd
