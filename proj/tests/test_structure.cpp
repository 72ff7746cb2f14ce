#include "support.hpp"

#include <doctest.h>

using namespace testing;

namespace {

RelationalStructure finite_fixture(const std::string& name) {
  return load_structure(fixture("structures/" + name + ".json")).structure;
}

RelationalStructure relabel(const RelationalStructure& r, const std::vector<int>& perm) {
  std::vector<Relation> rels = r.relations();
  for (auto& rel : rels)
    for (auto& t : rel.tuples)
      for (int& x : t)
        x = perm[x];
  return RelationalStructure(r.size(), rels);
}

/// Definition of a monomorphic part, checked over all pairs of subsets.
bool brute_monomorphic_part(const RelationalStructure& r, ElementSet part) {
  ElementSet all = (ElementSet{1} << r.size()) - 1;
  std::map<std::pair<int, ElementSet>, std::vector<std::vector<Tuple>>> first;
  for (ElementSet s = 0; s <= all; ++s) {
    auto key = std::make_pair(std::popcount(s), s & ~part);
    auto form = brute_canonical(induced(r, s));
    auto [it, fresh] = first.emplace(key, form);
    if (!fresh && it->second != form)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("isomorphism agrees with brute force") {
  Gen gen(101);
  for (int t = 0; t < 150; ++t) {
    int n = gen.uniform(1, 6);
    auto a = gen.coloured_digraph(n);
    RelationalStructure b;
    if (gen.coin()) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), gen.engine());
      b = relabel(a, perm);
      CHECK(isomorphic(a, b));
    } else {
      b = gen.coloured_digraph(n);
    }
    CHECK(isomorphic(a, b) == brute_isomorphic(a, b));
  }
}

TEST_CASE("profile agrees with brute force on random graphs") {
  Gen gen(103);
  for (int t = 0; t < 30; ++t) {
    auto r = gen.graph(gen.uniform(2, 7), 0.4);
    for (int n = 0; n <= r.size(); ++n)
      CHECK(profile(r, n) == brute_profile(r, n));
  }
}

TEST_CASE("finite fixture profiles") {
  auto k5 = finite_fixture("k5_plus_k5");
  for (int n = 0; n <= 10; ++n) {
    long split = 0; // unordered {a, b}, a + b = n, a, b <= 5
    for (int a = 0; a <= 5; ++a)
      if (n - a >= a && n - a <= 5)
        ++split;
    CHECK(profile(k5, n) == split);
  }
  for (int n = 0; n <= 5; ++n)
    CHECK(profile(finite_fixture("chain5"), n) == 1);
  CHECK(profile(finite_fixture("star_plus_two"), 3) == brute_profile(finite_fixture("star_plus_two"), 3));
}

TEST_CASE("local isomorphisms agree with the definition") {
  Gen gen(107);
  for (int t = 0; t < 200; ++t) {
    int n = gen.uniform(1, 5);
    auto r = gen.coloured_digraph(n);
    auto f = gen.local_bijection(n);
    bool expected = true;
    for (std::size_t i = 0; i < r.relations().size(); ++i) {
      int arity = r.relations()[i].arity;
      auto dom = f.domain().points();
      std::vector<int> idx(arity, 0);
      if (dom.empty())
        continue;
      while (true) {
        Tuple a, b;
        for (int k : idx) {
          a.push_back(dom[k]);
          b.push_back(f(dom[k]));
        }
        expected &= r.holds(i, a) == r.holds(i, b);
        int k = arity - 1;
        while (k >= 0 && ++idx[k] == static_cast<int>(dom.size()))
          idx[k--] = 0;
        if (k < 0)
          break;
      }
    }
    CHECK(is_local_isomorphism(r, f) == expected);
  }
}

TEST_CASE("monomorphic parts agree with the definition") {
  Gen gen(109);
  for (int t = 0; t < 40; ++t) {
    auto r = gen.graph(gen.uniform(2, 6), gen.coin() ? 0.2 : 0.8);
    ElementSet part = gen.uniform(0, (1 << r.size()) - 1);
    CHECK(is_monomorphic_part(r, part) == brute_monomorphic_part(r, part));
  }
}

TEST_CASE("canonical decomposition is the coarsest") {
  Gen gen(113);
  for (int t = 0; t < 25; ++t) {
    auto r = gen.graph(gen.uniform(2, 6), gen.coin() ? 0.15 : 0.85);
    auto blocks = canonical_decomposition(r);
    ElementSet seen = 0;
    for (ElementSet b : blocks) {
      CHECK((seen & b) == 0);
      seen |= b;
    }
    CHECK(seen == (ElementSet{1} << r.size()) - 1);
    CHECK(is_monomorphic_decomposition(r, blocks));
    // every monomorphic part lies inside a block
    for (ElementSet s = 1; s < (ElementSet{1} << r.size()); ++s)
      if (brute_monomorphic_part(r, s))
        CHECK(std::any_of(blocks.begin(), blocks.end(), [s](ElementSet b) { return (s & ~b) == 0; }));
  }
}

TEST_CASE("decomposition of finite fixtures") {
  CHECK(canonical_decomposition(finite_fixture("k5_plus_k5")) == std::vector<ElementSet>{0b11111, 0b1111100000});
  CHECK(canonical_decomposition(finite_fixture("chain5")).size() == 1);
  CHECK(canonical_decomposition(finite_fixture("star_plus_two")) ==
        std::vector<ElementSet>{0b1, 0b11110, 0b1100000});
}

TEST_CASE("twins and induced substructures") {
  auto r = finite_fixture("star_plus_two");
  CHECK(are_twins(r, 1, 2));
  CHECK(!are_twins(r, 0, 1));
  CHECK(are_twins(r, 5, 6));
  auto sub = induced(r, ElementSet{0b0000011});
  CHECK(sub.size() == 2);
  CHECK(sub.relations()[0].tuples.size() == 2);
}

TEST_CASE("guards and errors") {
  Gen gen(127);
  auto big = gen.graph(12);
  CHECK_THROWS_AS(isomorphic(big, big, 10), GuardExceeded);
  CHECK(isomorphic(big, big, 12));
  RelationalStructure unary(3, {Relation{"u", 1, {{0}}}});
  RelationalStructure binary(3, {Relation{"e", 2, {}}});
  CHECK_THROWS_AS(isomorphic(unary, binary), DomainError);
  CHECK_THROWS_AS(RelationalStructure(2, {Relation{"e", 2, {{0, 2}}}}), DomainError);
  CHECK_THROWS_AS(load_structure(fixture("structures/does_not_exist.json")), DomainError);
}
