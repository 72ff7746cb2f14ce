#include "support.hpp"

#include "pgd/set_algebra.hpp"

#include <doctest.h>

using namespace testing;

namespace {

SetFunction random_function(Gen& gen, int ground, int entries) {
  SetFunction f;
  for (int i = 0; i < entries; ++i)
    f.add(static_cast<Subset>(gen.uniform(0, (1 << ground) - 1)), gen.rational());
  return f;
}

/// Sum over M ⊆ P of f(M) g(P \ M), evaluated pointwise on every P.
SetFunction brute_product(const SetFunction& f, const SetFunction& g, int ground) {
  SetFunction out;
  for (Subset p = 0; p < (Subset{1} << ground); ++p) {
    Rational v = 0;
    Subset m = 0;
    do {
      v += f(m) * g(p & ~m);
      m = (m - p) & p;
    } while (m != 0);
    if (v != 0)
      out.add(p, v);
  }
  return out;
}

} // namespace

TEST_CASE("Cameron product against pointwise evaluation") {
  Gen gen(301);
  for (int t = 0; t < 100; ++t) {
    auto f = random_function(gen, 5, 4), g = random_function(gen, 5, 4), h = random_function(gen, 5, 3);
    CHECK(cameron_product(f, g) == brute_product(f, g, 5));
    CHECK(cameron_product(f, g) == cameron_product(g, f));
    CHECK(cameron_product(cameron_product(f, g), h) == cameron_product(f, cameron_product(g, h)));
    CHECK(cameron_product(SetFunction::unit(), f) == f);
  }
}

TEST_CASE("phi is multiplicative") {
  Gen gen(303);
  for (int t = 0; t < 60; ++t) {
    auto p = gen.polynomial(2, 2, 1), q = gen.polynomial(2, 2, 1);
    CHECK(phi_embedding(p * q, 2, 3) == cameron_product(phi_embedding(p, 2, 3), phi_embedding(q, 2, 3)));
  }
  // x1^2 on one point, two copies: 2! on the pair
  auto f = phi_embedding(parse_polynomial("x1^2").max_monomial(), 1, 2);
  CHECK(f(0b11) == 2);
  CHECK(f(0b01) == 0);
  CHECK_THROWS_AS(phi_embedding(parse_polynomial("x1^3").max_monomial(), 1, 2), DomainError);
}

TEST_CASE("chi counts covering pairs") {
  Equivalence by_size = [](Subset s) { return static_cast<std::int64_t>(std::popcount(s)); };
  Subset d = 0b1111;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 4; ++c) {
        long brute = 0;
        for (Subset x = 0; x <= d; ++x)
          for (Subset y = 0; y <= d; ++y)
            if (std::popcount(x) == a && std::popcount(y) == b && std::popcount(x | y) == c)
              ++brute;
        CHECK(chi(by_size, a, b, c, d) == brute);
      }
}

TEST_CASE("hereditary equivalences") {
  Equivalence by_size = [](Subset s) { return static_cast<std::int64_t>(std::popcount(s)); };
  CHECK(is_hereditary(by_size, 5, 5));
  Equivalence parity = [](Subset s) { return static_cast<std::int64_t>(std::popcount(s) % 2); };
  CHECK(!is_hereditary(parity, 4, 4));
  // singleton {0} is singled out, so {0,1} and {1,2} have different deletions
  Equivalence odd = [](Subset s) { return static_cast<std::int64_t>(std::popcount(s) * 2 + (s == 0b001 ? 1 : 0)); };
  CHECK(!is_hereditary(odd, 3, 3));

  Gen gen(307);
  for (int t = 0; t < 10; ++t) {
    auto r = gen.graph(gen.uniform(2, 6));
    auto labels = subset_iso_classes(r);
    Equivalence iso = [&labels](Subset s) { return static_cast<std::int64_t>(labels[s]); };
    CHECK(is_hereditary(iso, r.size(), r.size()));
  }
}

TEST_CASE("invariance of set functions") {
  Equivalence by_size = [](Subset s) { return static_cast<std::int64_t>(std::popcount(s)); };
  SetFunction f;
  for (Subset s = 0; s < 16; ++s)
    f.add(s, std::popcount(s));
  CHECK(is_invariant(f, by_size, 4, 4));
  f.add(0b0001, 1);
  CHECK(!is_invariant(f, by_size, 4, 4));
}
