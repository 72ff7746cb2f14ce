#include "pgd/term_order.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <functional>

namespace pgd {

TermOrder::TermOrder(OrderKind kind, std::vector<int> ranking) : kind_(kind), ranking_(std::move(ranking)) {
  auto sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.front() < 0))
    throw DomainError("variable ranking must list distinct non-negative variables");
}

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "lex")
    return lex();
  if (name == "degrevlex")
    return degrevlex();
  if (name == "shape")
    return shape_then_lex();
  throw DomainError("unknown term order '" + name + "' (expected lex, degrevlex or shape)");
}

std::vector<int> TermOrder::ranked_exponents(const Monomial& m, int width) const {
  std::vector<int> out;
  out.reserve(width);
  for (int v : ranking_)
    out.push_back(m.exponent(v));
  for (int v = 0; static_cast<int>(out.size()) < width; ++v)
    if (std::find(ranking_.begin(), ranking_.end(), v) == ranking_.end())
      out.push_back(m.exponent(v));
  return out;
}

std::strong_ordering TermOrder::lex_compare(const Monomial& a, const Monomial& b) const {
  int width = std::max({a.max_variable(), b.max_variable(), static_cast<int>(ranking_.size()) - 1}) + 1;
  auto ea = ranked_exponents(a, width), eb = ranked_exponents(b, width);
  return ea <=> eb;
}

std::strong_ordering TermOrder::degrevlex_compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  int width = std::max({a.max_variable(), b.max_variable(), static_cast<int>(ranking_.size()) - 1}) + 1;
  auto ea = ranked_exponents(a, width), eb = ranked_exponents(b, width);
  for (int i = width - 1; i >= 0; --i)
    if (ea[i] != eb[i])
      return eb[i] <=> ea[i];
  return std::strong_ordering::equal;
}

namespace {

std::strong_ordering shape_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  std::vector<int> sa, sb;
  for (auto [v, e] : a.entries())
    sa.push_back(e);
  for (auto [v, e] : b.entries())
    sb.push_back(e);
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  std::size_t width = std::max(sa.size(), sb.size());
  sa.resize(width, 0);
  sb.resize(width, 0);
  for (std::size_t i = width; i-- > 0;)
    if (sa[i] != sb[i])
      return sb[i] <=> sa[i];
  return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
  case OrderKind::Lex:
    return lex_compare(a, b);
  case OrderKind::DegRevLex:
    return degrevlex_compare(a, b);
  case OrderKind::ShapeThenLex:
    if (auto c = shape_compare(a, b); c != 0)
      return c;
    return lex_compare(a, b);
  }
  return std::strong_ordering::equal;
}

Monomial TermOrder::max(std::span<const Monomial> ms) const {
  if (ms.empty())
    throw DomainError("maximum of an empty monomial list");
  const Monomial* best = &ms[0];
  for (const auto& m : ms)
    if (less(*best, m))
      best = &m;
  return *best;
}

Monomial TermOrder::leading_monomial(const Polynomial& p) const {
  if (p.is_zero())
    throw DomainError("zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || less(*best, m))
      best = &m;
  return *best;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
  case OrderKind::Lex:
    return "lex";
  case OrderKind::DegRevLex:
    return "degrevlex";
  case OrderKind::ShapeThenLex:
    return "shape";
  }
  return "?";
}

} // namespace pgd
