#include "pgd/orbits.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pgd {

MonomialOrbit orbit(const PermutationGroupoid& g, const Monomial& m, const TermOrder& order) {
  if (m.max_variable() >= g.ground_size())
    throw DomainError("monomial uses a variable outside the ground set");
  std::unordered_set<Monomial, MonomialHash> seen{m};
  std::deque<Monomial> frontier{m};
  while (!frontier.empty()) {
    Monomial cur = frontier.front();
    frontier.pop_front();
    for (const auto& f : g.with_domain(cur.support())) {
      Monomial next = *act(f, cur);
      if (seen.insert(next).second)
        frontier.push_back(next);
    }
  }
  MonomialOrbit o;
  o.members.assign(seen.begin(), seen.end());
  std::sort(o.members.begin(), o.members.end());
  o.leading = order.max(o.members);
  return o;
}

Polynomial orbit_sum(const MonomialOrbit& o) {
  Polynomial p;
  for (const auto& m : o.members)
    p.add_term(m, 1);
  return p;
}

Polynomial orbit_sum(const PermutationGroupoid& g, const Monomial& m) { return orbit_sum(orbit(g, m)); }

std::vector<MonomialOrbit> orbits_of_degree(const PermutationGroupoid& g, int n, const TermOrder& order) {
  std::vector<MonomialOrbit> out;
  std::unordered_set<Monomial, MonomialHash> covered;
  for (const auto& m : monomials_of_degree(g.ground_size(), n)) {
    if (covered.count(m))
      continue;
    auto o = orbit(g, m, order);
    covered.insert(o.members.begin(), o.members.end());
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [&](const MonomialOrbit& a, const MonomialOrbit& b) { return order.less(b.leading, a.leading); });
  return out;
}

std::vector<Polynomial> orbit_sums_of_degree(const PermutationGroupoid& g, int n, const TermOrder& order) {
  std::vector<Polynomial> out;
  for (const auto& o : orbits_of_degree(g, n, order))
    out.push_back(orbit_sum(o));
  return out;
}

long orbit_count(const PermutationGroupoid& g, int n) {
  long count = 0;
  std::unordered_set<Monomial, MonomialHash> covered;
  for (const auto& m : monomials_of_degree(g.ground_size(), n)) {
    if (covered.count(m))
      continue;
    ++count;
    for (const auto& f : g.with_domain(m.support()))
      covered.insert(*act(f, m));
  }
  return count;
}

bool is_invariant(const PermutationGroupoid& g, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.max_variable() >= g.ground_size())
      return false;
    for (const auto& f : g.with_domain(m.support()))
      if (p.coefficient(*act(f, m)) != c)
        return false;
  }
  return true;
}

std::map<Monomial, Rational> orbit_coordinates(const PermutationGroupoid& g, const Polynomial& p,
                                               const TermOrder& order) {
  if (!is_invariant(g, p))
    throw DomainError("polynomial is not invariant: " + to_string(p));
  std::map<Monomial, Rational> out;
  std::unordered_set<Monomial, MonomialHash> covered;
  for (const auto& [m, c] : p.terms()) {
    if (covered.count(m))
      continue;
    auto o = orbit(g, m, order);
    covered.insert(o.members.begin(), o.members.end());
    out.emplace(o.leading, c);
  }
  return out;
}

std::map<Monomial, Rational> product_in_orbit_basis(const PermutationGroupoid& g, const Polynomial& a,
                                                    const Polynomial& b, const TermOrder& order) {
  if (!is_invariant(g, a) || !is_invariant(g, b))
    throw DomainError("orbit-basis product needs invariant factors");
  return orbit_coordinates(g, a * b, order);
}

ReynoldsOperator::ReynoldsOperator(const PermutationGroupoid& g) : g_(&g), element_{Basis::Graded, {}} {
  for (PointSet a : subsets_of(PointSet::full(g.ground_size()))) {
    auto block = g.with_domain(a);
    Rational weight(1, static_cast<unsigned long>(block.size()));
    weight.canonicalize();
    for (const auto& f : block)
      element_.add(f, weight);
  }
}

Polynomial ReynoldsOperator::apply(const Polynomial& p) const {
  // Only the block with domain = supp(m) acts on m.
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.max_variable() >= g_->ground_size())
      throw DomainError("polynomial uses a variable outside the ground set");
    auto block = g_->with_domain(m.support());
    Rational weight = c / static_cast<long>(block.size());
    for (const auto& f : block)
      out.add_term(*act(f, m), weight);
  }
  return out;
}

ReynoldsOperator reynolds(const PermutationGroupoid& g) { return ReynoldsOperator(g); }

std::optional<Witness> sym_morphism_witness(const PermutationGroupoid& g, int dmax) {
  auto r = reynolds(g);
  int n = g.ground_size();
  for (int d = 1; d <= n; ++d) {
    Polynomial e = elementary_symmetric(d, n);
    for (int deg = 0; deg <= dmax; ++deg)
      for (const auto& m : monomials_of_degree(n, deg)) {
        Polynomial p(m);
        Polynomial lhs = r.apply(e * p), rhs = e * r.apply(p);
        if (lhs != rhs)
          return Witness{"R(e_" + std::to_string(d) + " * p) != e_" + std::to_string(d) + " * R(p)", p,
                         lhs - rhs};
      }
  }
  return std::nullopt;
}

bool reynolds_is_sym_morphism(const PermutationGroupoid& g, int dmax) {
  return !sym_morphism_witness(g, dmax).has_value();
}

namespace {

template <class Op>
std::optional<Witness> stability_witness(const PermutationGroupoid& g, int dmax, const std::string& name, Op op) {
  for (int deg = 0; deg <= dmax; ++deg)
    for (const auto& o : orbit_sums_of_degree(g, deg)) {
      Polynomial image = op(o);
      if (!is_invariant(g, image))
        return Witness{name + "(" + to_string(o) + ") is not invariant", o, image};
    }
  return std::nullopt;
}

} // namespace

std::optional<Witness> derivation_witness(const PermutationGroupoid& g, int dmax) {
  int n = g.ground_size();
  return stability_witness(g, dmax, "D", [n](const Polynomial& p) { return derivation_D(p, n); });
}

std::optional<Witness> steenrod_witness(const PermutationGroupoid& g, int k, int dmax) {
  int n = g.ground_size();
  return stability_witness(g, dmax, "S_" + std::to_string(k),
                           [n, k](const Polynomial& p) { return steenrod(k, p, n); });
}

} // namespace pgd
