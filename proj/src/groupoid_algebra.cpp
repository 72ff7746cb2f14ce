#include "pgd/groupoid_algebra.hpp"

#include "pgd/errors.hpp"

namespace pgd {

void AlgebraElement::add(const LocalBijection& f, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = coefficients.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      coefficients.erase(it);
  }
}

void check_support(const PermutationGroupoid& g, const AlgebraElement& a) {
  for (const auto& [f, c] : a.coefficients)
    if (!g.contains(f))
      throw DomainError("algebra element supported outside the groupoid: " + to_string(f));
}

AlgebraElement monoid_to_graded(const PermutationGroupoid& g, const AlgebraElement& a) {
  if (a.basis != Basis::Monoid)
    throw DomainError("monoid_to_graded expects the monoid basis");
  check_support(g, a);
  AlgebraElement out{Basis::Graded, {}};
  for (const auto& [f, c] : a.coefficients)
    for (PointSet s : subsets_of(f.domain()))
      out.add(f.restricted_to(s), c);
  return out;
}

AlgebraElement graded_to_monoid(const PermutationGroupoid& g, const AlgebraElement& a) {
  if (a.basis != Basis::Graded)
    throw DomainError("graded_to_monoid expects the graded basis");
  check_support(g, a);
  AlgebraElement out{Basis::Monoid, {}};
  for (const auto& [f, c] : a.coefficients)
    for (PointSet s : subsets_of(f.domain())) {
      bool odd = (f.domain().size() - s.size()) % 2 != 0;
      out.add(f.restricted_to(s), odd ? Rational(-c) : c);
    }
  return out;
}

AlgebraElement multiply(const PermutationGroupoid& g, const AlgebraElement& a, const AlgebraElement& b) {
  if (a.basis != b.basis)
    throw DomainError("cannot multiply elements written in different bases");
  check_support(g, a);
  check_support(g, b);
  AlgebraElement out{a.basis, {}};
  for (const auto& [f, cf] : a.coefficients)
    for (const auto& [h, ch] : b.coefficients) {
      if (a.basis == Basis::Graded) {
        if (h.image() == f.domain())
          out.add(compose(f, h), cf * ch);
      } else {
        out.add(compose_monoid(f, h), cf * ch);
      }
    }
  return out;
}

Polynomial act(const AlgebraElement& a, const Polynomial& p) {
  Polynomial out;
  for (const auto& [f, c] : a.coefficients)
    out += c * (a.basis == Basis::Graded ? act_graded(f, p) : act(f, p));
  return out;
}

} // namespace pgd
