#include "pgd/acceptance.hpp"

#include "pgd/errors.hpp"
#include "pgd/json_io.hpp"
#include "pgd/layered.hpp"
#include "pgd/module_structure.hpp"
#include "pgd/orbits.hpp"
#include "pgd/series.hpp"
#include "pgd/set_algebra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace pgd {

namespace {

// Time limits, in seconds.
constexpr double kLimitNonCmSeries = 5.0;
constexpr double kLimitNonFreeness = 30.0;
constexpr double kLimitQsym = 60.0;

// Degree and size bounds.
constexpr int kNonCmDimsUpTo = 20;
constexpr int kSeriesMargin = 10;
constexpr int kNonnegFactors = 3;
constexpr int kNonnegMaxExp = 8;
constexpr int kNonCmFreenessDmax = 6;
constexpr int kQsym2Dmax = 8;
constexpr int kBridgeUpTo = 6;
constexpr int kStaircaseDmax = 10;
constexpr int kReynoldsDmax = 8;
constexpr int kDerivationDmax = 6;
constexpr int kSteenrodMaxK = 3;
constexpr int kProfileUpTo = 20;
constexpr int kRandomPairs = 200;
constexpr int kStarTriples = 500;
constexpr int kStarMaxDegree = 6;
constexpr int kStarPoints = 4;
constexpr int kAddLayerDmax = 6;
constexpr unsigned kSeed = 20240611u;

const std::vector<std::string> kGroupoidFixtures = {
    "alt3",  "cyclic3", "double_transposition", "noncm", "qsym2",  "qsym3",
    "staircase3", "sym2", "sym2_plus_fixed",    "sym3",  "trivial3"};
const std::vector<std::string> kLayeredFixtures = {
    "clique_plus_independent", "four_blocks",   "four_cliques", "intervals_k1",          "intervals_k2",
    "intervals_k3",            "negative",   "three_cliques", "two_cliques", "wheel_plus_independent"};
const std::vector<std::string> kFiniteFixtures = {"chain5", "empty6", "k5_plus_k5", "star_plus_two"};

class Context {
public:
  explicit Context(std::string dir) : dir_(std::move(dir)) {}

  PermutationGroupoid groupoid(const std::string& name) const {
    return load_groupoid(dir_ + "/groupoids/" + name + ".json");
  }
  StructureFile structure(const std::string& name) const {
    return load_structure(dir_ + "/structures/" + name + ".json");
  }
  LayeredStructure layered(const std::string& name) const {
    auto f = structure(name);
    if (!f.layered)
      throw DomainError("fixture '" + name + "' is not layered");
    return *f.layered;
  }

private:
  std::string dir_;
};

/// Collects named sub-checks and their details.
class Checks {
public:
  void check(bool ok, const std::string& what) {
    all_ &= ok;
    lines_ << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
  void note(const std::string& what) { lines_ << "     " << what << "\n"; }
  bool passed() const { return all_; }
  std::string detail() const { return lines_.str(); }

private:
  bool all_ = true;
  std::ostringstream lines_;
};

template <class T> std::string join(const std::vector<T>& xs, const std::string& sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << (i ? sep : "") << xs[i];
  return out.str();
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return std::vector<Integer>(xs.begin(), xs.end()); }

std::string numerator_string(const RationalSeries& s) { return polynomial_in_z(s.numerator); }

// ---------------------------------------------------------------------------

void criterion1(const Context& ctx, Checks& c) {
  auto g = ctx.groupoid("noncm");
  bool dims_ok = orbit_count(g, 0) == 1;
  for (int n = 1; n <= kNonCmDimsUpTo; ++n)
    dims_ok &= Integer(orbit_count(g, n)) == binomial(n + 2, 2) - 1;
  c.check(dims_ok, "dim K[X]^G_n = C(n+2,2) - 1 for 1 <= n <= 20, dim_0 = 1");
  auto s = hilbert_series(g, {1, 2, 3}, kSeriesMargin);
  c.check(s.numerator == ints({1, 1, 2, 2, 1, 0, -1}), "numerator over (1-Z)(1-Z^2)(1-Z^3): " + numerator_string(s));
}

void criterion2(const Context& ctx, Checks& c) {
  auto g = ctx.groupoid("noncm");
  auto report = truncated_freeness(g, kNonCmFreenessDmax);
  std::vector<Polynomial> expected = {Polynomial(1), parse_polynomial("x1*x3"), parse_polynomial("x1^2*x2")};
  std::vector<std::string> shown;
  for (const auto& p : report.generators)
    shown.push_back(to_string(p));
  c.check(report.generators == expected, "generators: " + join(shown, ", "));
  c.check(report.generator_degrees == std::vector<int>{0, 2, 3}, "generator degrees: " + join(report.generator_degrees));
  c.check(report.first_syzygy_degree == 4,
          "first syzygy degree: " + (report.first_syzygy_degree ? std::to_string(*report.first_syzygy_degree) : "none"));
  auto s = hilbert_series(g, {1, 2, 3}, kSeriesMargin);
  auto search = nonnegativity_search(s, kNonnegFactors, kNonnegMaxExp);
  c.check(!search.found, "no non-negative numerator with <= 3 factors, exponents <= 8 (" +
                             std::to_string(search.examined) + " denominators examined)");
}

void criterion3(const Context& ctx, Checks& c) {
  auto q2 = ctx.groupoid("qsym2");
  bool dims_ok = true;
  for (int n = 0; n <= kNonCmDimsUpTo; ++n)
    dims_ok &= orbit_count(q2, n) == std::max(n, 1);
  c.check(dims_ok, "QSym(X_2) dimensions 1, 1, 2, 3, ... up to degree 20");
  auto s2 = hilbert_series(q2, {1, 2}, kSeriesMargin);
  c.check(s2.numerator == ints({1, 0, 0, 1}), "QSym(X_2) numerator over (1-Z)(1-Z^2): " + numerator_string(s2));

  auto gens = chain_generators(q2);
  std::vector<ChainGenerator> family;
  for (const auto& gen : gens)
    if (gen.monomial == Monomial() || gen.monomial == parse_polynomial("x1*x2^2").max_monomial())
      family.push_back(gen);
  auto inc = incidence_matrix_freeness(q2, family);
  std::ostringstream m;
  for (const auto& row : inc.matrix) {
    m << "[";
    for (std::size_t j = 0; j < row.size(); ++j)
      m << (j ? " " : "") << to_string(row[j]);
    m << "]";
  }
  c.check(inc.matrix.size() == 2 && inc.invertible, "incidence matrix for {1, x1*x2^2}: " + m.str() + " invertible");
  auto report = truncated_freeness(q2, kQsym2Dmax);
  c.check(predicted_rank(q2) == 2 && !report.first_syzygy_degree && report.generators.size() == 2 &&
              report.generator_degrees == std::vector<int>{0, 3},
          "free of rank 2 = 2!/1 with generator degrees " + join(report.generator_degrees));

  auto q3 = ctx.groupoid("qsym3");
  auto s3 = hilbert_series(q3, {1, 2, 3}, kSeriesMargin);
  bool nonneg = std::all_of(s3.numerator.begin(), s3.numerator.end(), [](const Integer& x) { return x >= 0; });
  c.check(nonneg, "QSym(X_3) numerator over (1-Z)(1-Z^2)(1-Z^3): " + numerator_string(s3));
}

void criterion4(const Context& ctx, Checks& c) {
  for (const std::string name : {"noncm", "sym2_plus_fixed", "qsym3"}) {
    auto g = ctx.groupoid(name);
    LayeredStructure l{to_relational_structure(g), std::vector<std::optional<int>>(g.ground_size()), true};
    auto values = profile_layered_values(l, kBridgeUpTo);
    std::vector<long> orbits;
    for (int n = 0; n <= kBridgeUpTo; ++n)
      orbits.push_back(orbit_count(g, n));
    c.check(values == orbits, name + ": profile " + join(values) + " vs orbit counts " + join(orbits));
  }
}

void criterion5(const Context& ctx, Checks& c) {
  auto g = ctx.groupoid("staircase3");
  auto report = truncated_freeness(g, kStaircaseDmax);
  int top = report.generator_degrees.empty() ? -1 : report.generator_degrees.back();
  c.check(!report.first_syzygy_degree && Integer(static_cast<long>(report.generators.size())) == report.predicted_rank,
          "free through degree 10 with " + std::to_string(report.generators.size()) + " generators, predicted rank " +
              report.predicted_rank.get_str() + ", degrees " + join(report.generator_degrees));
  c.check(top == 6, "top generator degree " + std::to_string(top) + " = 3*4/2");

  auto gens = chain_generators(g);
  std::vector<Polynomial> chain_sums;
  int max_chain_degree = 0;
  for (const auto& gen : gens) {
    chain_sums.push_back(gen.orbit_sum);
    max_chain_degree = std::max(max_chain_degree, gen.degree);
  }
  auto generation = check_module_family(g, chain_sums, kStaircaseDmax, false);
  c.check(!generation.first_non_spanning && max_chain_degree == 6,
          "chain generators (max degree " + std::to_string(max_chain_degree) + ") span every degree <= 10");

  std::vector<Polynomial> stated{Polynomial(1)};
  std::vector<std::string> names;
  for (int d2 = 1; d2 <= 2; ++d2)
    for (int d3 = 1; d3 <= 3; ++d3) {
      std::vector<int> d{1, d2, d3};
      auto m = Monomial::from_exponents(d);
      stated.push_back(orbit_sum(g, m));
      names.push_back(to_string(m));
    }
  auto family = check_module_family(g, stated, kStaircaseDmax, false);
  std::string why;
  if (family.first_relation)
    why += " relation in degree " + std::to_string(*family.first_relation);
  if (family.first_non_spanning)
    why += " fails to span degree " + std::to_string(*family.first_non_spanning);
  c.check(family.basis_up_to_dmax(),
          "stated basis {1} + {" + join(names, ", ") + "} (" + std::to_string(stated.size()) + " elements) is a basis" +
              why);

  // x1*x2*x3 = e_3 * 1, so the stated family has one element too many.
  std::vector<Polynomial> without_e3(stated.begin(), stated.end());
  without_e3.erase(without_e3.begin() + 1);
  bool corrected = check_module_family(g, without_e3, kStaircaseDmax, false).basis_up_to_dmax();
  c.note(std::string("without x1*x2*x3 (") + std::to_string(without_e3.size()) + " elements) the family is " +
         (corrected ? "a basis" : "not a basis") + " through degree 10");
}

void criterion6(const Context& ctx, Checks& c) {
  for (const auto& name : kGroupoidFixtures) {
    auto g = ctx.groupoid(name);
    auto r = reynolds(g);
    bool idempotent = true, ranks = true;
    for (int n = 0; n <= kReynoldsDmax && idempotent && ranks; ++n) {
      EchelonBasis image;
      for (const auto& m : monomials_of_degree(g.ground_size(), n)) {
        Polynomial once = r.apply(Polynomial(m));
        idempotent &= r.apply(once) == once;
        image.insert(once);
      }
      ranks &= static_cast<long>(image.rank()) == orbit_count(g, n);
    }
    bool algebra_idempotent = multiply(g, r.element(), r.element()) == r.element();
    bool from_group = comes_from_group(g);
    bool morphism = reynolds_is_sym_morphism(g, g.ground_size() + 2);
    c.check(idempotent && ranks && algebra_idempotent && morphism == from_group,
            name + ": R^2 = R, image ranks = orbit counts (deg <= 8), sym-morphism " + (morphism ? "yes" : "no") +
                ", comes from group " + (from_group ? "yes" : "no"));
  }
}

void criterion7(const Context& ctx, Checks& c) {
  for (const auto& name : kGroupoidFixtures) {
    auto g = ctx.groupoid(name);
    auto witness = derivation_witness(g, kDerivationDmax);
    bool from_group = comes_from_group(g);
    bool steenrod_ok = true;
    for (int k = 0; k <= kSteenrodMaxK; ++k)
      steenrod_ok &= !steenrod_witness(g, k, kDerivationDmax);
    c.check((!witness) == from_group && steenrod_ok,
            name + ": D-stable " + (witness ? "no" : "yes") + ", comes from group " + (from_group ? "yes" : "no") +
                ", S_0..S_3 stable " + (steenrod_ok ? "yes" : "no"));
    if (witness)
      c.note("witness: " + witness->description + " = " + to_string(witness->output));
  }
}

void criterion8(const Context& ctx, Checks& c) {
  const std::vector<std::pair<std::string, bool>> expected = {
      {"sym3", true}, {"alt3", false}, {"qsym2", false}, {"noncm", false}};
  for (const auto& [name, want] : expected) {
    auto g = ctx.groupoid(name);
    bool got = sagbi_finite(g, TermOrder::lex());
    c.check(got == want, name + ": finite SAGBI basis " + (got ? "yes" : "no"));
  }
  auto explorer = initial_monoid_explorer(ctx.groupoid("qsym2"), TermOrder::lex({1, 0}), 8);
  std::vector<std::string> found;
  for (const auto& [deg, ms] : explorer)
    for (const auto& m : ms)
      found.push_back(to_string(m));
  c.note("qsym2 explorer, lex with x2 > x1, empirical up to degree 8: " + join(found, ", "));
}

long partitions_at_most(int n, int parts) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int size = 1; size <= parts; ++size)
    for (int v = size; v <= n; ++v)
      p[v] += p[v - size];
  return p[n];
}

void criterion9(const Context& ctx, Checks& c, int jobs) {
  auto compare = [&](const std::string& name, const std::function<long(int)>& formula, const std::string& form) {
    auto values = profile_layered_values(ctx.layered(name), kProfileUpTo, jobs);
    bool ok = true;
    for (int n = 0; n <= kProfileUpTo; ++n)
      ok &= values[n] == formula(n);
    c.check(ok, name + ": " + form + " for n <= 20");
  };
  for (int k = 1; k <= 3; ++k)
    compare("intervals_k" + std::to_string(k), [k](int n) { return binomial(n + k, k).get_si(); },
            "C(n+" + std::to_string(k) + "," + std::to_string(k) + ")");
  compare("two_cliques", [](int n) { return n / 2 + 1; }, "floor(n/2)+1");
  compare("three_cliques", [](int n) { return partitions_at_most(n, 3); }, "p_3(n)");
  compare("four_cliques", [](int n) { return partitions_at_most(n, 4); }, "p_4(n)");
  compare("wheel_plus_independent", [](int n) { return n == 0 ? 1L : static_cast<long>(n); }, "phi(n) = n");
  compare("clique_plus_independent", [](int n) { return n == 0 ? 1L : static_cast<long>(n); }, "phi(n) = n");
  compare("negative", [](int n) { return n <= 2 ? 1L : n / 2 + 1L; }, "1, 1, 1 then floor(n/2)+1");

  auto series = profile_series(ctx.layered("four_blocks"), kSeriesMargin, jobs);
  auto over4 = rewrite_denominator(series, {1, 1, 1, 1});
  c.check(over4 && over4->numerator == ints({1, -1, 3, -3, 1}),
          "four_blocks: numerator over (1-Z)^4: " + (over4 ? numerator_string(*over4) : std::string("no exact rewrite")));
}

void criterion10(const Context& ctx, Checks& c, int jobs) {
  std::mt19937 rng(kSeed);

  // Hereditary equivalences and products of invariant maps.
  for (const auto& name : kFiniteFixtures) {
    auto r = ctx.structure(name).structure;
    auto labels = subset_iso_classes(r);
    Equivalence eq = [&labels](Subset s) { return static_cast<std::int64_t>(labels[s]); };
    bool hereditary = is_hereditary(eq, r.size(), r.size());
    int max_label = *std::max_element(labels.begin(), labels.end());
    int half = r.size() / 2;
    std::uniform_int_distribution<int> value(-3, 3);
    bool closed = true;
    for (int t = 0; t < kRandomPairs && closed; ++t) {
      std::vector<Rational> fa(max_label + 1), fb(max_label + 1);
      for (int i = 0; i <= max_label; ++i) {
        fa[i] = value(rng);
        fb[i] = Rational(value(rng), 2);
        fb[i].canonicalize();
      }
      SetFunction f, g;
      for (Subset s = 0; s < labels.size(); ++s)
        if (std::popcount(s) <= half) {
          f.add(s, fa[labels[s]]);
          g.add(s, fb[labels[s]]);
        }
      closed &= is_invariant(cameron_product(f, g), eq, r.size(), r.size());
    }
    c.check(hereditary && closed, name + ": isomorphism equivalence hereditary, 200 invariant products invariant");
  }

  // Chain product associativity.
  {
    std::uniform_int_distribution<int> exp(0, 3);
    bool assoc = true;
    auto random_monomial = [&]() {
      while (true) {
        std::vector<int> d(kStarPoints);
        for (int& e : d)
          e = exp(rng);
        auto m = Monomial::from_exponents(d);
        if (m.degree() <= kStarMaxDegree)
          return m;
      }
    };
    for (int t = 0; t < kStarTriples; ++t) {
      Polynomial a(random_monomial()), b(random_monomial()), d(random_monomial());
      assoc &= star_product(star_product(a, b), d) == star_product(a, star_product(b, d));
    }
    c.check(assoc, "star product associative on 500 random monomial triples");
  }

  for (const auto& name : kLayeredFixtures) {
    auto report = check_addlayer(ctx.layered(name), kAddLayerDmax);
    c.check(report.ok, name + ": leading monomials stable under adding a layer to degree 6 (" +
                           std::to_string(report.checked) + " checks)" +
                           (report.ok ? "" : ": " + report.violation));
  }

  // Canonical decomposition is the coarsest monomorphic decomposition.
  for (const auto& name : kFiniteFixtures) {
    auto r = ctx.structure(name).structure;
    auto blocks = canonical_decomposition(r);
    bool ok = is_monomorphic_decomposition(r, blocks);
    auto labels_all = subset_iso_classes(r);
    for (ElementSet b : blocks)
      for (int y = 0; y < r.size(); ++y)
        if (!(b >> y & 1))
          ok &= !is_monomorphic_part(r, b | (ElementSet{1} << y));
    c.check(ok, name + ": canonical decomposition into " + std::to_string(blocks.size()) +
                    " blocks is monomorphic and no block extends");
  }

  for (const auto& name : kLayeredFixtures) {
    auto l = ctx.layered(name);
    if (l.unbounded_count() == 0)
      continue;
    auto values = profile_layered_values(l, kProfileUpTo, jobs);
    c.check(std::is_sorted(values.begin(), values.end()), name + ": profile non-decreasing to n = 20");
  }
}

} // namespace

CriterionResult run_criterion(int id, const std::string& fixture_dir, int jobs) {
  static const char* titles[kCriterionCount] = {
      "non-CM groupoid series",        "non-freeness detection",   "QSym freeness",
      "groupoid/profile bridge",       "degree bound tightness",   "Reynolds operator",
      "derivation and Steenrod stability", "SAGBI criterion",      "profile fixtures",
      "property suites"};
  static const double limits[kCriterionCount] = {kLimitNonCmSeries, kLimitNonFreeness, kLimitQsym, 0, 0, 0, 0, 0, 0, 0};
  if (id < 1 || id > kCriterionCount)
    throw DomainError("no acceptance criterion " + std::to_string(id));
  CriterionResult result;
  result.id = id;
  result.title = titles[id - 1];
  result.limit_seconds = limits[id - 1];
  Context ctx(fixture_dir);
  Checks checks;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
    case 1: criterion1(ctx, checks); break;
    case 2: criterion2(ctx, checks); break;
    case 3: criterion3(ctx, checks); break;
    case 4: criterion4(ctx, checks); break;
    case 5: criterion5(ctx, checks); break;
    case 6: criterion6(ctx, checks); break;
    case 7: criterion7(ctx, checks); break;
    case 8: criterion8(ctx, checks); break;
    case 9: criterion9(ctx, checks, jobs); break;
    case 10: criterion10(ctx, checks, jobs); break;
    }
  } catch (const std::exception& e) {
    checks.check(false, std::string("error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = result.limit_seconds == 0 || result.seconds < result.limit_seconds;
  if (!in_time)
    checks.check(false, "time limit exceeded");
  result.passed = checks.passed();
  result.detail = checks.detail();
  return result;
}

std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir, int jobs) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, fixture_dir, jobs));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%2d] %s (%.2f s%s)", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(r.limit_seconds)) + " s").c_str() : "");
  std::string out = head;
  std::istringstream lines(r.detail);
  for (std::string line; std::getline(lines, line);)
    out += "\n      " + line;
  return out;
}

} // namespace pgd
