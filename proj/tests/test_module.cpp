#include "support.hpp"

#include "pgd/module_structure.hpp"
#include "pgd/orbits.hpp"
#include "pgd/series.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("chain generators of QSym on two points") {
  auto gens = chain_generators(groupoid_fixture("qsym2"));
  std::vector<std::string> shown;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    shown.push_back(to_string(g.monomial));
    degrees.push_back(g.degree);
  }
  CHECK(shown == std::vector<std::string>{"1", "x1", "x1*x2", "x1^2*x2", "x1*x2^2"});
  CHECK(degrees == std::vector<int>{0, 1, 2, 3, 3});
}

TEST_CASE("strict-chain orbits are counted by distinct-value exponent patterns") {
  for (const auto& name : groupoid_names()) {
    CAPTURE(name);
    auto g = groupoid_fixture(name);
    auto gens = chain_generators(g);
    for (const auto& gen : gens) {
      auto d = gen.monomial.exponents(g.ground_size());
      int top = *std::max_element(d.begin(), d.end());
      for (int v = 1; v <= top; ++v)
        CHECK(std::count(d.begin(), d.end(), v) > 0);
      CHECK(is_invariant(g, gen.orbit_sum));
    }
  }
}

TEST_CASE("generator degrees of free fixtures reproduce the Hilbert numerator") {
  for (const auto& name : groupoid_names()) {
    CAPTURE(name);
    auto g = groupoid_fixture(name);
    auto report = truncated_freeness(g, 9);
    if (report.first_syzygy_degree)
      continue;
    CHECK(Integer(static_cast<long>(report.generators.size())) == report.predicted_rank);
    std::vector<int> den;
    for (auto c : transitive_components(g))
      for (int j = 1; j <= c.size(); ++j)
        den.push_back(j);
    std::sort(den.begin(), den.end());
    auto s = hilbert_series(g, den);
    std::vector<Integer> from_degrees;
    for (int d : report.generator_degrees) {
      if (static_cast<int>(from_degrees.size()) <= d)
        from_degrees.resize(d + 1, 0);
      from_degrees[d] += 1;
    }
    CHECK(s.numerator == from_degrees);
  }
}

TEST_CASE("the non-CM fixture is not free") {
  auto report = truncated_freeness(groupoid_fixture("noncm"), 6);
  REQUIRE(report.first_syzygy_degree);
  CHECK(*report.first_syzygy_degree == 4);
  CHECK(report.free_up_to == 3);
}

TEST_CASE("predicted rank") {
  CHECK(predicted_rank(groupoid_fixture("sym3")) == 1);
  CHECK(predicted_rank(groupoid_fixture("alt3")) == 2);
  CHECK(predicted_rank(groupoid_fixture("qsym3")) == 6);
  CHECK(predicted_rank(groupoid_fixture("noncm")) == 2);
  CHECK(predicted_rank(groupoid_fixture("trivial3")) == 1);
}

TEST_CASE("symmetric basis") {
  for (int k = 0; k <= 8; ++k)
    CHECK(static_cast<long>(sym_basis({PointSet::full(3)}, k).size()) == partitions_at_most(k, 3));
  // two components: products of e's on each
  CHECK(sym_basis({PointSet(0b011), PointSet(0b100)}, 2).size() == 4);
}

TEST_CASE("module family checks") {
  auto g = groupoid_fixture("qsym2");
  auto ok = check_module_family(g, {Polynomial(1), parse_polynomial("x1*x2^2")}, 8);
  CHECK(ok.basis_up_to_dmax());
  auto missing = check_module_family(g, {Polynomial(1)}, 8);
  REQUIRE(missing.first_non_spanning);
  CHECK(*missing.first_non_spanning == 3);
  auto dependent = check_module_family(g, {Polynomial(1), parse_polynomial("x1 + x2"), parse_polynomial("x1*x2^2")}, 8);
  REQUIRE(dependent.first_relation);
  CHECK(*dependent.first_relation == 1);
}

TEST_CASE("fine multiplicities and incidence search for QSym on two points") {
  auto g = groupoid_fixture("qsym2");
  auto mult = predicted_fine_multiplicities(g);
  CHECK(mult[0] == 1);
  CHECK(mult[1] == 0);
  CHECK(mult[2] == 0);
  CHECK(mult[3] == 1);
  auto search = search_incidence_family(g);
  REQUIRE(search.family);
  CHECK(search.family->size() == 2);
  CHECK(incidence_matrix_freeness(g, *search.family).invertible);
}

TEST_CASE("incidence matrix for a group") {
  auto g = groupoid_fixture("sym3");
  auto gens = chain_generators(g);
  auto inc = incidence_matrix_freeness(g, {gens.front()});
  CHECK(inc.matrix.size() == 1);
  CHECK(inc.invertible);
  CHECK_THROWS_AS(incidence_matrix_freeness(g, {gens[0], gens[1]}), DomainError);
}

TEST_CASE("SAGBI criterion and explorer") {
  CHECK(sagbi_finite(groupoid_fixture("sym3"), TermOrder::lex()));
  CHECK(sagbi_finite(groupoid_fixture("sym2_plus_fixed"), TermOrder::lex()));
  CHECK(!sagbi_finite(groupoid_fixture("cyclic3"), TermOrder::lex()));
  auto sym = initial_monoid_explorer(groupoid_fixture("sym3"), TermOrder::lex(), 6);
  std::vector<std::string> found;
  for (const auto& [d, ms] : sym)
    for (const auto& m : ms)
      found.push_back(to_string(m));
  CHECK(found == std::vector<std::string>{"x1", "x1*x2", "x1*x2*x3"});
  auto q = initial_monoid_explorer(groupoid_fixture("qsym2"), TermOrder::lex({1, 0}), 6);
  CHECK(q.size() == 6);
  for (const auto& [d, ms] : q)
    CHECK(ms.size() == 1);
}

TEST_CASE("algebra generator counts") {
  auto counts = algebra_generator_counts(groupoid_fixture("sym3"), 5, false);
  REQUIRE(counts.size() == 6);
  CHECK(std::vector<long>(counts.begin() + 1, counts.end()) == std::vector<long>{1, 1, 1, 0, 0});
}
