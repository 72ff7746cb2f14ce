#include "support.hpp"

#include "pgd/layered.hpp"
#include "pgd/series.hpp"

#include <doctest.h>

using namespace testing;

namespace {

LayeredStructure layered_fixture(const std::string& name) {
  return *load_structure(fixture("structures/" + name + ".json")).layered;
}

const std::vector<std::string> kLayered = {"clique_plus_independent", "four_blocks",    "four_cliques",
                                           "intervals_k1",            "intervals_k2", "intervals_k3",
                                           "negative",                "three_cliques", "two_cliques",
                                           "wheel_plus_independent"};

std::vector<int> sizes_for(const LayeredStructure& l, int n) {
  std::vector<int> sizes;
  for (const auto& m : l.multiplicities)
    sizes.push_back(m ? std::min(*m, n) : n);
  return sizes;
}

} // namespace

TEST_CASE("layered profile equals the brute-force profile of a large enough realization") {
  for (const auto& name : kLayered) {
    CAPTURE(name);
    auto l = layered_fixture(name);
    int upto = l.component_count() >= 4 ? 3 : 4;
    auto values = profile_layered_values(l, upto);
    for (int n = 0; n <= upto; ++n)
      CHECK(values[n] == brute_profile(realize(l, sizes_for(l, n)), n));
  }
}

TEST_CASE("twin canonical forms decide isomorphism") {
  Gen gen(211);
  for (const auto& name : {"four_blocks", "negative", "wheel_plus_independent", "intervals_k2"}) {
    auto l = layered_fixture(name);
    int k = l.component_count();
    for (int t = 0; t < 30; ++t) {
      std::vector<int> a(k), b(k);
      for (int i = 0; i < k; ++i) {
        int cap = l.multiplicities[i] ? *l.multiplicities[i] : 3;
        a[i] = gen.uniform(0, std::min(cap, 2));
        b[i] = gen.uniform(0, std::min(cap, 2));
      }
      if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0))
        continue;
      bool same = trace_form(l, a) == trace_form(l, b);
      CHECK(same == brute_isomorphic(realize(l, a), realize(l, b)));
    }
  }
}

TEST_CASE("trace vectors") {
  auto l = layered_fixture("intervals_k3");
  for (int n = 0; n <= 6; ++n)
    CHECK(static_cast<long>(trace_vectors(l, n).size()) == choose(n + 3, 3));
  auto w = layered_fixture("wheel_plus_independent");
  // centre has one copy
  CHECK(trace_vectors(w, 3).size() == 4 + 3);
}

TEST_CASE("layered series") {
  auto two = profile_series(layered_fixture("two_cliques"));
  CHECK(two.denominator == std::vector<int>{1, 2});
  CHECK(two.numerator == std::vector<Integer>{1});

  auto wheel = profile_series(layered_fixture("wheel_plus_independent"));
  auto r = rewrite_denominator(wheel, {1, 2});
  REQUIRE(r);
  CHECK(r->numerator == std::vector<Integer>{1, 0, 0, 1});

  auto neg = profile_series(layered_fixture("negative"));
  for (int k = 2; k <= 20; k += 2) {
    auto over = rewrite_denominator(neg, {1, k});
    REQUIRE(over);
    CHECK(over->numerator.back() == -1);
  }
}

TEST_CASE("profiles do not depend on the thread count") {
  for (const auto& name : {"four_cliques", "four_blocks"}) {
    auto l = layered_fixture(name);
    CHECK(profile_layered_values(l, 12, 1) == profile_layered_values(l, 12, 3));
  }
}

TEST_CASE("add-layer property on fixtures") {
  for (const auto& name : kLayered) {
    auto report = check_addlayer(layered_fixture(name), 5);
    CHECK(report.ok);
    CHECK(report.checked > 0);
  }
}

TEST_CASE("multiplicities must match the quotient") {
  auto l = layered_fixture("two_cliques");
  l.multiplicities.pop_back();
  CHECK_THROWS_AS(l.validate(), DomainError);
  auto bad = nlohmann::json::parse(R"({"ground": 2, "relations": [], "multiplicities": {"0": "inf"}})");
  CHECK_THROWS_AS(structure_from_json(bad), DomainError);
}
