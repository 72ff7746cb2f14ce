#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace testing;

namespace {

using Map = std::map<int, int>;

/// Naive fixpoint: inverses, restrictions to every subset, compositions, plus id_X.
std::set<Map> naive_closure(const std::vector<LocalBijection>& gens, int n) {
  std::set<Map> s;
  Map id;
  for (int i = 0; i < n; ++i)
    id[i] = i;
  s.insert(id);
  for (const auto& g : gens) {
    Map m;
    for (auto [a, b] : g.pairs())
      m[a] = b;
    s.insert(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Map> next = s;
    for (const auto& f : s) {
      Map inv;
      for (auto [a, b] : f)
        inv[b] = a;
      next.insert(inv);
      std::vector<std::pair<int, int>> pairs(f.begin(), f.end());
      for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        Map r;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (mask >> i & 1)
            r.insert(pairs[i]);
        next.insert(r);
      }
      for (const auto& g : s) {
        std::set<int> img, dom;
        for (auto [a, b] : g)
          img.insert(b);
        for (auto [a, b] : f)
          dom.insert(a);
        if (img != dom)
          continue;
        Map c;
        for (auto [a, b] : g)
          c[a] = f.at(b);
        next.insert(c);
      }
    }
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

std::set<Map> as_maps(const PermutationGroupoid& g) {
  std::set<Map> out;
  for (const auto& f : g.elements()) {
    Map m;
    for (auto [a, b] : f.pairs())
      m[a] = b;
    out.insert(m);
  }
  return out;
}

} // namespace

TEST_CASE("closure of no generators is the identities on all subsets") {
  for (int n = 0; n <= 5; ++n) {
    auto g = close({}, n);
    CHECK(g.size() == (std::size_t{1} << n));
    for (const auto& f : g.elements())
      CHECK(f.is_identity());
  }
}

TEST_CASE("closure of 1->2 on three points") {
  auto g = groupoid_fixture("noncm");
  // 8 identities, {1->2}, {2->1}; no rule takes unions
  CHECK(g.size() == 10);
  CHECK(!comes_from_group(g));
  CHECK(satisfies_groupoid_axioms(g.elements(), 3));
}

TEST_CASE("closure agrees with a naive fixpoint on random generators") {
  Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = gen.uniform(1, 4);
    std::vector<LocalBijection> gens;
    for (int k = gen.uniform(0, 3); k > 0; --k)
      gens.push_back(gen.local_bijection(n));
    auto g = close(gens, n);
    CHECK(as_maps(g) == naive_closure(gens, n));
    CHECK(satisfies_groupoid_axioms(g.elements(), n));
    for (const auto& f : gens)
      CHECK(g.contains(f));
    CHECK(close(g.elements(), n) == g);
  }
}

TEST_CASE("full local bijections count sum C(n,k)^2 k!") {
  for (int n = 0; n <= 4; ++n) {
    long expected = 0;
    for (int k = 0; k <= n; ++k) {
      long fact = 1;
      for (int i = 2; i <= k; ++i)
        fact *= i;
      expected += choose(n, k) * choose(n, k) * fact;
    }
    CHECK(static_cast<long>(full_local_bijections(n).size()) == expected);
  }
}

TEST_CASE("groups: restrictions of the permutations") {
  auto sym3 = groupoid_fixture("sym3");
  CHECK(sym3 == full_local_bijections(3));
  CHECK(comes_from_group(sym3));
  CHECK(reflection_criterion(sym3));

  auto alt3 = groupoid_fixture("alt3");
  // distinct restrictions: 1 + 9 + 9 + 3
  CHECK(alt3.size() == 22);
  CHECK(underlying_group(alt3).size() == 3);
  CHECK(comes_from_group(alt3));
  CHECK(!reflection_criterion(alt3));
}

TEST_CASE("QSym and staircase groupoids") {
  auto q = increasing_groupoid(3);
  CHECK(q == groupoid_fixture("qsym3"));
  for (const auto& f : q.elements()) {
    auto pairs = f.pairs();
    for (std::size_t i = 1; i < pairs.size(); ++i)
      CHECK(pairs[i - 1].second < pairs[i].second);
  }
  auto st = staircase_groupoid(3);
  CHECK(st == groupoid_fixture("staircase3"));
  CHECK(underlying_group(st).size() == 1);
  for (const auto& f : st.elements())
    CHECK((f.rank() < 3 || f.is_identity()));
}

TEST_CASE("restriction of C3 to two points is the chain groupoid") {
  auto c3 = groupoid_fixture("cyclic3");
  auto r = restrict(c3, PointSet(0b011));
  CHECK(r.ground_size() == 2);
  // on {a, b}: identities plus the maps a->b and b->a of rank 1
  CHECK(r.size() == 6);
  CHECK(!comes_from_group(r));
  CHECK(r == increasing_groupoid(2));
}

TEST_CASE("transitive components") {
  auto comps = transitive_components(groupoid_fixture("sym2_plus_fixed"));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == PointSet(0b011));
  CHECK(comps[1] == PointSet(0b100));
  CHECK(transitive_components(groupoid_fixture("trivial3")).size() == 3);
}

TEST_CASE("the relational structure of G has exactly G as local isomorphisms") {
  for (const auto& name : groupoid_names()) {
    CAPTURE(name);
    auto g = groupoid_fixture(name);
    auto r = to_relational_structure(g);
    auto locals = local_isomorphisms(r);
    CHECK(locals == g.elements());
  }
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(LocalBijection::from_pairs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(LocalBijection::from_pairs(3, std::vector<std::pair<int, int>>{{0, 3}}), DomainError);
  CHECK_THROWS_AS(groupoid_from_json(nlohmann::json::parse(R"({"ground": ["a","b"], "generators": [{"map": {"a": "c"}}]})")),
                  DomainError);
  CHECK_THROWS_AS(read_json_file(fixture("groupoids/missing.json")), DomainError);
}

TEST_CASE("json round trip") {
  auto g = groupoid_fixture("cyclic3");
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(groupoid_from_json(groupoid_to_json(g)) == g);
}
