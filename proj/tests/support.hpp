#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit tests.

#include "pgd/errors.hpp"
#include "pgd/groupoid.hpp"
#include "pgd/json_io.hpp"
#include "pgd/polynomial.hpp"
#include "pgd/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace pgd;

inline std::string fixture(const std::string& rel) { return std::string(PGD_FIXTURE_DIR) + "/" + rel; }
inline PermutationGroupoid groupoid_fixture(const std::string& name) {
  return load_groupoid(fixture("groupoids/" + name + ".json"));
}

inline const std::vector<std::string>& groupoid_names() {
  static const std::vector<std::string> names = {"alt3",  "cyclic3",    "double_transposition", "noncm",
                                                 "qsym2", "qsym3",      "staircase3",           "sym2",
                                                 "sym2_plus_fixed", "sym3", "trivial3"};
  return names;
}

class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  LocalBijection local_bijection(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng_);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      if (coin(0.6))
        pairs.emplace_back(i, images[i]);
    return LocalBijection::from_pairs(n, pairs);
  }

  Monomial monomial(int n, int max_exp) {
    std::vector<int> d(n);
    for (int& e : d)
      e = uniform(0, max_exp);
    return Monomial::from_exponents(d);
  }

  Rational rational() {
    Rational q(uniform(-6, 6), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(int n, int terms, int max_exp) {
    Polynomial p;
    for (int t = 0; t < terms; ++t)
      p.add_term(monomial(n, max_exp), rational());
    return p;
  }

  /// Random graph as a symmetric irreflexive binary relation.
  RelationalStructure graph(int n, double density = 0.5) {
    Relation edge{"edge", 2, {}};
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(density)) {
          edge.tuples.push_back({a, b});
          edge.tuples.push_back({b, a});
        }
    return RelationalStructure(n, {edge});
  }

  /// Random digraph with an extra unary predicate.
  RelationalStructure coloured_digraph(int n) {
    Relation arc{"arc", 2, {}}, colour{"colour", 1, {}};
    for (int a = 0; a < n; ++a) {
      if (coin(0.3))
        colour.tuples.push_back({a});
      for (int b = 0; b < n; ++b)
        if (a != b && coin(0.3))
          arc.tuples.push_back({a, b});
    }
    return RelationalStructure(n, {arc, colour});
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

/// Canonical form by minimising the full encoding over all relabellings.
inline std::vector<std::vector<Tuple>> brute_canonical(const RelationalStructure& r) {
  std::vector<int> perm(r.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Tuple>> best;
  bool first = true;
  do {
    std::vector<std::vector<Tuple>> enc;
    for (const auto& rel : r.relations()) {
      std::vector<Tuple> ts;
      for (const auto& t : rel.tuples) {
        Tuple u;
        for (int x : t)
          u.push_back(perm[x]);
        ts.push_back(u);
      }
      std::sort(ts.begin(), ts.end());
      enc.push_back(ts);
    }
    if (first || enc < best) {
      best = enc;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const RelationalStructure& a, const RelationalStructure& b) {
  return a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
}

/// Number of isomorphism types of n-element induced substructures, by brute force.
inline long brute_profile(const RelationalStructure& r, int n) {
  std::vector<std::vector<std::vector<Tuple>>> seen;
  for (ElementSet s = 0; s < (ElementSet{1} << r.size()); ++s) {
    if (std::popcount(s) != n)
      continue;
    auto form = brute_canonical(induced(r, s));
    if (std::find(seen.begin(), seen.end(), form) == seen.end())
      seen.push_back(form);
  }
  return static_cast<long>(seen.size());
}

/// Number of partitions of n into at most k parts.
inline long partitions_at_most(int n, int k) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int v = part; v <= n; ++v)
      p[v] += p[v - part];
  return p[n];
}

inline long choose(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  long c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * (n - k + i) / i;
  return c;
}

} // namespace testing
