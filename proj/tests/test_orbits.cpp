#include "support.hpp"

#include "pgd/groupoid_algebra.hpp"
#include "pgd/orbits.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

/// Orbit count by brute force: union-find on monomials under single applications.
long brute_orbit_count(const PermutationGroupoid& g, int degree) {
  auto ms = monomials_of_degree(g.ground_size(), degree);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < ms.size(); ++i)
    index[ms[i]] = static_cast<int>(i);
  std::vector<int> parent(ms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : ms)
    for (const auto& f : g.elements())
      if (auto img = act(f, m))
        parent[find(index[m])] = find(index[*img]);
  std::set<int> roots;
  for (std::size_t i = 0; i < ms.size(); ++i)
    roots.insert(find(static_cast<int>(i)));
  return static_cast<long>(roots.size());
}

/// dim QSym_n(X_k): compositions of n with at most k parts.
long qsym_dim(int n, int k) {
  if (n == 0)
    return 1;
  long total = 0;
  for (int j = 1; j <= k; ++j)
    total += choose(n - 1, j - 1);
  return total;
}

} // namespace

TEST_CASE("orbit counts against oracles") {
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(orbit_count(groupoid_fixture("sym3"), n) == partitions_at_most(n, 3));
    CHECK(orbit_count(groupoid_fixture("trivial3"), n) == choose(n + 2, 2));
    CHECK(orbit_count(groupoid_fixture("qsym3"), n) == qsym_dim(n, 3));
    CHECK(orbit_count(groupoid_fixture("qsym2"), n) == qsym_dim(n, 2));
  }
  for (const auto& name : groupoid_names()) {
    auto g = groupoid_fixture(name);
    for (int n = 0; n <= 5; ++n)
      CHECK(orbit_count(g, n) == brute_orbit_count(g, n));
  }
}

TEST_CASE("orbits partition the monomials and orbit sums are invariant") {
  for (const auto& name : groupoid_names()) {
    CAPTURE(name);
    auto g = groupoid_fixture(name);
    for (int n = 0; n <= 4; ++n) {
      std::size_t covered = 0;
      for (const auto& o : orbits_of_degree(g, n)) {
        covered += o.members.size();
        CHECK(std::find(o.members.begin(), o.members.end(), o.leading) != o.members.end());
        CHECK(is_invariant(g, orbit_sum(o)));
      }
      CHECK(covered == monomials_of_degree(g.ground_size(), n).size());
    }
  }
}

TEST_CASE("orbit listing is sorted by leading monomial") {
  auto orbits = orbits_of_degree(groupoid_fixture("qsym2"), 3);
  REQUIRE(orbits.size() == 3);
  CHECK(to_string(orbits[0].leading) == "x1^3");
  CHECK(orbits[0].members.size() == 2);
}

TEST_CASE("invariant products expand in the orbit basis") {
  auto g = groupoid_fixture("qsym2");
  auto p1 = parse_polynomial("x1 + x2");
  auto coords = product_in_orbit_basis(g, p1, p1);
  CHECK(coords.size() == 2);
  CHECK(coords[parse_polynomial("x1^2").max_monomial()] == 1);
  CHECK(coords[parse_polynomial("x1*x2").max_monomial()] == 2);
  CHECK_THROWS_AS(product_in_orbit_basis(g, parse_polynomial("x1"), p1), DomainError);
}

TEST_CASE("Reynolds operator averages over the orbit") {
  for (const auto& name : groupoid_names()) {
    CAPTURE(name);
    auto g = groupoid_fixture(name);
    auto r = reynolds(g);
    for (int n = 0; n <= 4; ++n)
      for (const auto& m : monomials_of_degree(g.ground_size(), n)) {
        auto o = orbit(g, m);
        Polynomial expected = orbit_sum(o) * Rational(1, static_cast<long>(o.members.size()));
        CHECK(r.apply(Polynomial(m)) == expected);
        CHECK(act(r.element(), Polynomial(m)) == expected);
      }
  }
}

TEST_CASE("groupoid algebra basis change") {
  Gen gen(41);
  for (const auto& name : {"noncm", "qsym3", "alt3"}) {
    auto g = groupoid_fixture(name);
    for (int t = 0; t < 20; ++t) {
      AlgebraElement a{Basis::Monoid, {}}, b{Basis::Monoid, {}};
      for (int k = 0; k < 3; ++k) {
        a.add(g.elements()[gen.uniform(0, static_cast<int>(g.size()) - 1)], gen.rational());
        b.add(g.elements()[gen.uniform(0, static_cast<int>(g.size()) - 1)], gen.rational());
      }
      auto ga = monoid_to_graded(g, a);
      CHECK(graded_to_monoid(g, ga) == a);
      // products agree in both bases
      CHECK(monoid_to_graded(g, multiply(g, a, b)) == multiply(g, ga, monoid_to_graded(g, b)));
      // the action does not depend on the basis
      auto p = gen.polynomial(g.ground_size(), 3, 2);
      CHECK(act(a, p) == act(ga, p));
    }
  }
}

TEST_CASE("Sym-linearity of the Reynolds operator") {
  CHECK(reynolds_is_sym_morphism(groupoid_fixture("sym3"), 5));
  auto w = sym_morphism_witness(groupoid_fixture("qsym2"), 4);
  REQUIRE(w);
  CHECK(!w->description.empty());
}

TEST_CASE("derivation witness for QSym on two points") {
  auto w = derivation_witness(groupoid_fixture("qsym2"), 3);
  REQUIRE(w);
  CHECK(w->input == parse_polynomial("x1^2*x2"));
  CHECK(!derivation_witness(groupoid_fixture("sym3"), 5));
  for (int k = 0; k <= 3; ++k)
    CHECK(!steenrod_witness(groupoid_fixture("noncm"), k, 5));
}
