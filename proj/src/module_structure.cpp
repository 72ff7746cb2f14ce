#include "pgd/module_structure.hpp"

#include "pgd/errors.hpp"
#include "pgd/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pgd {

std::vector<ChainGenerator> chain_generators(const PermutationGroupoid& g) {
  int n = g.ground_size();
  auto order = TermOrder::shape_then_lex();
  // Strict-chain monomials: the exponent values used on the support are exactly 1..k.
  std::vector<Monomial> chains;
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      int k = *std::max_element(exps.begin(), exps.end());
      for (int v = 1; v <= k; ++v)
        if (std::find(exps.begin(), exps.end(), v) == exps.end())
          return;
      chains.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int v = 0; v <= n; ++v) {
      exps[i] = v;
      self(self, i + 1);
    }
  };
  if (n == 0)
    chains.emplace_back();
  else
    rec(rec, 0);

  std::vector<ChainGenerator> out;
  std::unordered_set<Monomial, MonomialHash> covered;
  for (const auto& m : chains) {
    if (covered.count(m))
      continue;
    auto o = orbit(g, m, order);
    covered.insert(o.members.begin(), o.members.end());
    ChainGenerator gen;
    gen.monomial = o.leading;
    gen.orbit_sum = orbit_sum(o);
    gen.degree = o.leading.degree();
    for (const auto& layer : chain_decompose(o.leading).layers) {
      gen.chain.push_back(layer.set);
      gen.sizes |= 1u << (layer.set.size() - 1);
    }
    out.push_back(std::move(gen));
  }
  std::sort(out.begin(), out.end(), [&](const ChainGenerator& a, const ChainGenerator& b) {
    if (a.degree != b.degree)
      return a.degree < b.degree;
    return order.less(b.monomial, a.monomial);
  });
  return out;
}

std::vector<Polynomial> sym_basis(const std::vector<PointSet>& components, int k) {
  // Generators e_{c,j} with their degrees j.
  std::vector<std::pair<Polynomial, int>> gens;
  for (PointSet c : components)
    for (int j = 1; j <= c.size(); ++j)
      gens.emplace_back(elementary_symmetric(j, c), j);
  std::vector<Polynomial> out;
  auto rec = [&](auto&& self, std::size_t i, int left, const Polynomial& acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    if (i == gens.size())
      return;
    Polynomial p = acc;
    for (int used = 0; used * gens[i].second <= left; ++used) {
      self(self, i + 1, left - used * gens[i].second, p);
      p = p * gens[i].first;
    }
  };
  if (k >= 0)
    rec(rec, 0, k, Polynomial(1));
  return out;
}

Integer predicted_rank(const PermutationGroupoid& g) {
  Integer num = 1;
  for (PointSet c : transitive_components(g))
    num *= factorial(c.size());
  Integer group = static_cast<unsigned long>(underlying_group(g).size());
  return num / group;
}

FreenessReport truncated_freeness(const PermutationGroupoid& g, int dmax) {
  auto components = transitive_components(g);
  std::vector<std::vector<Polynomial>> sym(dmax + 1);
  for (int k = 0; k <= dmax; ++k)
    sym[k] = sym_basis(components, k);

  FreenessReport report;
  report.predicted_rank = predicted_rank(g);
  for (int n = 0; n <= dmax; ++n) {
    EchelonBasis span;
    std::size_t expected = 0;
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
      int rest = n - report.generator_degrees[i];
      if (rest < 0)
        continue;
      for (const auto& s : sym[rest])
        span.insert(s * report.generators[i]);
      expected += sym[rest].size();
    }
    if (span.rank() < expected && !report.first_syzygy_degree)
      report.first_syzygy_degree = n;
    for (const auto& o : orbit_sums_of_degree(g, n))
      if (span.insert(o)) {
        report.generators.push_back(o);
        report.generator_degrees.push_back(n);
      }
  }
  report.free_up_to = report.first_syzygy_degree ? *report.first_syzygy_degree - 1 : dmax;
  return report;
}

FamilyCheck check_module_family(const PermutationGroupoid& g, const std::vector<Polynomial>& family, int dmax,
                                bool component_sym) {
  std::vector<PointSet> components =
      component_sym ? transitive_components(g) : std::vector<PointSet>{PointSet::full(g.ground_size())};
  FamilyCheck check;
  for (int n = 0; n <= dmax; ++n) {
    EchelonBasis span;
    std::size_t expected = 0;
    for (const auto& f : family) {
      if (f.is_zero() || !f.is_homogeneous())
        throw DomainError("module family members must be nonzero and homogeneous");
      int rest = n - f.degree();
      if (rest < 0)
        continue;
      auto basis = sym_basis(components, rest);
      for (const auto& s : basis)
        span.insert(s * f);
      expected += basis.size();
    }
    if (span.rank() < expected && !check.first_relation)
      check.first_relation = n;
    if (static_cast<long>(span.rank()) != orbit_count(g, n) && !check.first_non_spanning)
      check.first_non_spanning = n;
  }
  return check;
}

namespace {

/// Flag monomials x_{s1}^n x_{s2}^{n-1} ... for every ordering s of the points.
std::vector<Monomial> flag_monomials(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Monomial> out;
  do {
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i)
      exps[perm[i]] = n - i;
    out.push_back(Monomial::from_exponents(exps));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace

IncidenceResult incidence_matrix_freeness(const PermutationGroupoid& g, const std::vector<ChainGenerator>& family) {
  int n = g.ground_size();
  auto group = underlying_group(g);
  // Orbit representatives: largest flag monomial in each G(X,X)-orbit.
  std::set<Monomial> reps;
  for (const auto& m : flag_monomials(n)) {
    Monomial best = m;
    for (const auto& f : group)
      best = std::max(best, *act(f, m));
    reps.insert(best);
  }
  IncidenceResult result;
  result.flag_columns.assign(reps.rbegin(), reps.rend());
  if (family.size() != result.flag_columns.size())
    throw DomainError("family has " + std::to_string(family.size()) + " members but there are " +
                      std::to_string(result.flag_columns.size()) + " flag orbits");
  for (const auto& gen : family) {
    Polynomial completed = gen.orbit_sum;
    for (int j = 1; j <= n; ++j)
      if (!(gen.sizes >> (j - 1) & 1u))
        completed = star_product(completed, elementary_symmetric(j, n));
    std::vector<Rational> row;
    for (const auto& col : result.flag_columns)
      row.push_back(completed.coefficient(col));
    result.matrix.push_back(std::move(row));
  }
  result.invertible = is_invertible(result.matrix);
  return result;
}

std::map<std::uint32_t, long> predicted_fine_multiplicities(const PermutationGroupoid& g) {
  int n = g.ground_size();
  std::map<std::uint32_t, long> counts;
  for (const auto& gen : chain_generators(g))
    ++counts[gen.sizes];
  std::map<std::uint32_t, long> mult;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    long v = 0;
    for (PointSet t : subsets_of(PointSet(u))) {
      auto it = counts.find(t.bits());
      long c = it == counts.end() ? 0 : it->second;
      v += ((PointSet(u).size() - t.size()) % 2 ? -c : c);
    }
    mult[u] = v;
  }
  return mult;
}

FamilySearchResult search_incidence_family(const PermutationGroupoid& g, long limit) {
  FamilySearchResult result;
  auto mult = predicted_fine_multiplicities(g);
  for (auto [u, m] : mult)
    if (m < 0) {
      result.negative_multiplicity = true;
      return result;
    }
  auto gens = chain_generators(g);
  std::map<std::uint32_t, std::vector<const ChainGenerator*>> by_sizes;
  for (const auto& gen : gens)
    by_sizes[gen.sizes].push_back(&gen);

  struct Slot {
    std::vector<const ChainGenerator*> pool;
    long take;
  };
  std::vector<Slot> slots;
  for (auto [u, m] : mult)
    if (m > 0)
      slots.push_back({by_sizes[u], m});

  std::vector<ChainGenerator> chosen;
  auto rec = [&](auto&& self, std::size_t slot, std::size_t start, long left) -> bool {
    if (slot == slots.size()) {
      if (++result.examined > limit) {
        result.limit_reached = true;
        return true;
      }
      if (incidence_matrix_freeness(g, chosen).invertible) {
        result.family = chosen;
        return true;
      }
      return false;
    }
    if (left == 0)
      return self(self, slot + 1, 0, slot + 1 < slots.size() ? slots[slot + 1].take : 0);
    const auto& pool = slots[slot].pool;
    for (std::size_t i = start; i + left <= pool.size(); ++i) {
      chosen.push_back(*pool[i]);
      if (self(self, slot, i + 1, left - 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0, 0, slots.empty() ? 0 : slots[0].take);
  return result;
}

bool sagbi_finite(const PermutationGroupoid& g, const TermOrder& /*order*/) { return reflection_criterion(g); }

std::map<int, std::vector<Monomial>> initial_monoid_explorer(const PermutationGroupoid& g, const TermOrder& order,
                                                             int dmax) {
  std::vector<std::vector<Monomial>> initial(dmax + 1);
  std::vector<std::unordered_set<Monomial, MonomialHash>> lookup(dmax + 1);
  std::map<int, std::vector<Monomial>> irreducible;
  for (int n = 1; n <= dmax; ++n) {
    for (const auto& o : orbits_of_degree(g, n, order)) {
      initial[n].push_back(o.leading);
      lookup[n].insert(o.leading);
    }
    for (const auto& m : initial[n]) {
      bool reducible = false;
      for (int i = 1; i < n && !reducible; ++i)
        for (const auto& a : initial[i]) {
          // m = a * b with b of degree n - i in the monoid.
          bool divides = true;
          std::vector<int> rest = m.exponents(g.ground_size());
          for (auto [v, e] : a.entries()) {
            rest[v] -= e;
            divides = divides && rest[v] >= 0;
          }
          if (divides && lookup[n - i].count(Monomial::from_exponents(rest))) {
            reducible = true;
            break;
          }
        }
      if (!reducible)
        irreducible[n].push_back(m);
    }
  }
  return irreducible;
}

std::vector<long> algebra_generator_counts(const PermutationGroupoid& g, int dmax, bool star) {
  std::vector<std::vector<Polynomial>> basis(dmax + 1);
  std::vector<long> counts(dmax + 1, 0);
  for (int n = 0; n <= dmax; ++n) {
    basis[n] = orbit_sums_of_degree(g, n);
    if (n == 0)
      continue;
    EchelonBasis span;
    for (int i = 1; i < n; ++i)
      for (const auto& a : basis[i])
        for (const auto& b : basis[n - i])
          span.insert(star ? star_product(a, b) : a * b);
    counts[n] = static_cast<long>(basis[n].size() - span.rank());
  }
  return counts;
}

} // namespace pgd
