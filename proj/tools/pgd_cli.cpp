// pgd: command-line front end for the groupoid and profile library.

#include "pgd/acceptance.hpp"
#include "pgd/errors.hpp"
#include "pgd/json_io.hpp"
#include "pgd/layered.hpp"
#include "pgd/module_structure.hpp"
#include "pgd/orbits.hpp"
#include "pgd/series.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace pgd;

struct Options {
  std::string groupoid;
  std::string structure;
  std::string den;
  std::string order = "shape";
  std::string poly;
  std::string dir = PGD_FIXTURE_DIR;
  int degree = 0;
  int upto = 8;
  int margin = 10;
  int dmax = 8;
  int jobs = 1;
  int guard = kDefaultGuard;
  bool json = false;
  bool series = false;
};

std::vector<int> parse_den(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1)
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--den", "expected comma-separated positive exponents, got '" + text + "'");
    }
  }
  if (out.empty())
    throw CLI::ValidationError("--den", "empty denominator");
  return out;
}

std::vector<int> default_den(int k) {
  std::vector<int> den;
  for (int i = 1; i <= k; ++i)
    den.push_back(i);
  return den;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

int cmd_close(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  if (o.json) {
    std::cout << groupoid_to_json(g).dump(1) << "\n";
    return 0;
  }
  for (const auto& f : g.elements())
    std::cout << to_string(f, g.labels()) << "\n";
  return 0;
}

int cmd_orbits(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  auto orbits = orbits_of_degree(g, o.degree, TermOrder::parse(o.order));
  if (o.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& orb : orbits)
      out.push_back({{"leading", to_string(orb.leading)}, {"size", orb.members.size()}});
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (const auto& orb : orbits)
    std::cout << to_string(orb.leading) << " " << orb.members.size() << "\n";
  return 0;
}

int cmd_hilbert(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  auto den = o.den.empty() ? default_den(g.ground_size()) : parse_den(o.den);
  auto s = hilbert_series(g, den, o.margin);
  if (o.json)
    std::cout << series_to_json(s).dump() << "\n";
  else
    std::cout << to_string(s) << "\n";
  return 0;
}

int cmd_profile(const Options& o) {
  auto file = load_structure(o.structure);
  std::vector<long> values;
  if (file.layered) {
    values = profile_layered_values(*file.layered, o.upto, o.jobs);
  } else {
    for (int n = 0; n <= std::min(o.upto, file.structure.size()); ++n)
      values.push_back(profile(file.structure, n, o.guard));
  }
  std::optional<RationalSeries> series;
  if (o.series) {
    if (!file.layered)
      throw DomainError("--series needs a layered structure (with \"multiplicities\")");
    series = profile_series(*file.layered, o.margin, o.jobs);
    if (!o.den.empty()) {
      auto rewritten = rewrite_denominator(*series, parse_den(o.den));
      if (!rewritten)
        throw DomainError("series has no polynomial numerator over the requested denominator");
      series = rewritten;
    }
  }
  if (o.json) {
    nlohmann::json out = {{"values", values}};
    if (series)
      out["series"] = series_to_json(*series);
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    std::cout << (i ? " " : "") << values[i];
  std::cout << "\n";
  if (series)
    std::cout << to_string(*series) << "\n";
  return 0;
}

int cmd_decompose(const Options& o) {
  auto file = load_structure(o.structure);
  if (file.layered)
    throw DomainError("decompose works on finite structures; a layered file is already decomposed by its components");
  auto blocks = canonical_decomposition(file.structure, o.guard);
  nlohmann::json out = nlohmann::json::array();
  for (ElementSet b : blocks) {
    std::vector<std::string> members;
    for (int x = 0; x < file.structure.size(); ++x)
      if (b >> x & 1)
        members.push_back(file.labels[x]);
    out.push_back(members);
    if (!o.json) {
      for (std::size_t i = 0; i < members.size(); ++i)
        std::cout << (i ? " " : "") << members[i];
      std::cout << "\n";
    }
  }
  if (o.json)
    std::cout << out.dump() << "\n";
  return 0;
}

int cmd_freeness(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  auto report = truncated_freeness(g, o.dmax);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : report.generators)
    gens.push_back(to_string(p));
  nlohmann::json out = {{"dmax", o.dmax},
                        {"free_up_to", report.free_up_to},
                        {"generator_degrees", report.generator_degrees},
                        {"generators", gens},
                        {"first_syzygy_degree", nullptr},
                        {"predicted_rank", report.predicted_rank.get_str()}};
  if (report.first_syzygy_degree)
    out["first_syzygy_degree"] = *report.first_syzygy_degree;
  std::cout << out.dump(1) << "\n";
  return 0;
}

int cmd_reynolds(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  auto r = reynolds(g);
  if (!o.poly.empty()) {
    std::cout << to_string(r.apply(parse_polynomial(o.poly))) << "\n";
    return 0;
  }
  for (const auto& [f, c] : r.element().coefficients)
    std::cout << to_string(c) << " gr " << to_string(f, g.labels()) << "\n";
  auto witness = sym_morphism_witness(g, o.dmax);
  std::cout << "sym-morphism: " << bool_word(!witness) << "\n";
  if (witness)
    std::cout << "witness: " << witness->description << "\n";
  return 0;
}

int cmd_sagbi(const Options& o) {
  auto g = load_groupoid(o.groupoid);
  auto order = TermOrder::parse(o.order);
  std::cout << "finite: " << bool_word(sagbi_finite(g, order)) << "\n";
  for (const auto& [deg, ms] : initial_monoid_explorer(g, order, o.dmax)) {
    std::cout << "degree " << deg << ":";
    for (const auto& m : ms)
      std::cout << " " << to_string(m);
    std::cout << "\n";
  }
  return 0;
}

int cmd_fixtures(const Options& o) {
  bool all = true;
  nlohmann::json out = nlohmann::json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    auto r = run_criterion(id, o.dir, o.jobs);
    all &= r.passed;
    if (o.json)
      out.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << format_result(r) << std::endl;
  }
  if (o.json)
    std::cout << out.dump(1) << "\n";
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Permutation groupoids, invariant rings and profiles"};
  app.require_subcommand(1);

  auto groupoid_opt = [&](CLI::App* c) { c->add_option("--groupoid", o.groupoid, "groupoid JSON file")->required()->check(CLI::ExistingFile); };
  auto structure_opt = [&](CLI::App* c) { c->add_option("--structure", o.structure, "structure JSON file")->required()->check(CLI::ExistingFile); };
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };
  auto guard_opt = [&](CLI::App* c) { c->add_option("--guard-override", o.guard, "size guard for exhaustive isomorphism search")->check(CLI::PositiveNumber); };

  auto* close_cmd = app.add_subcommand("close", "closure of the generators: every element, one per line");
  groupoid_opt(close_cmd);
  json_flag(close_cmd);

  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of degree-n monomials: leading monomial and size");
  groupoid_opt(orbits_cmd);
  orbits_cmd->add_option("--degree", o.degree, "degree")->required()->check(CLI::NonNegativeNumber);
  orbits_cmd->add_option("--order", o.order, "term order")->check(CLI::IsMember({"lex", "degrevlex", "shape"}));
  json_flag(orbits_cmd);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series over a product of (1-Z^d)");
  groupoid_opt(hilbert_cmd);
  hilbert_cmd->add_option("--den", o.den, "denominator exponents, e.g. 1,2,3");
  hilbert_cmd->add_option("--margin", o.margin, "extra verified degrees")->check(CLI::NonNegativeNumber);
  json_flag(hilbert_cmd);

  auto* profile_cmd = app.add_subcommand("profile", "profile phi(0..n) of a structure");
  structure_opt(profile_cmd);
  profile_cmd->add_option("--upto,--degree", o.upto, "largest n")->check(CLI::NonNegativeNumber);
  profile_cmd->add_flag("--series", o.series, "also fit the generating series");
  profile_cmd->add_option("--den", o.den, "rewrite the series over these exponents");
  profile_cmd->add_option("--margin", o.margin, "extra verified degrees")->check(CLI::NonNegativeNumber);
  profile_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  guard_opt(profile_cmd);
  json_flag(profile_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "canonical monomorphic decomposition");
  structure_opt(decompose_cmd);
  guard_opt(decompose_cmd);
  json_flag(decompose_cmd);

  auto* freeness_cmd = app.add_subcommand("freeness", "truncated freeness report (JSON)");
  groupoid_opt(freeness_cmd);
  freeness_cmd->add_option("--dmax", o.dmax, "largest degree")->check(CLI::NonNegativeNumber);

  auto* reynolds_cmd = app.add_subcommand("reynolds", "Reynolds element, or its image of --poly");
  groupoid_opt(reynolds_cmd);
  reynolds_cmd->add_option("--poly", o.poly, "polynomial such as 3/2*x1^2*x2 - x3");
  reynolds_cmd->add_option("--dmax", o.dmax, "degree bound for the Sym-linearity check")->check(CLI::NonNegativeNumber);

  auto* sagbi_cmd = app.add_subcommand("sagbi", "finite SAGBI criterion and initial-monoid explorer");
  groupoid_opt(sagbi_cmd);
  sagbi_cmd->add_option("--order", o.order, "term order")->check(CLI::IsMember({"lex", "degrevlex", "shape"}));
  sagbi_cmd->add_option("--dmax", o.dmax, "explorer degree bound")->check(CLI::NonNegativeNumber);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "replay the fixture corpus and print a pass/fail table");
  fixtures_cmd->add_option("--dir", o.dir, "fixture directory")->check(CLI::ExistingDirectory);
  fixtures_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  json_flag(fixtures_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*close_cmd) return cmd_close(o);
    if (*orbits_cmd) return cmd_orbits(o);
    if (*hilbert_cmd) return cmd_hilbert(o);
    if (*profile_cmd) return cmd_profile(o);
    if (*decompose_cmd) return cmd_decompose(o);
    if (*freeness_cmd) return cmd_freeness(o);
    if (*reynolds_cmd) return cmd_reynolds(o);
    if (*sagbi_cmd) return cmd_sagbi(o);
    if (*fixtures_cmd) return cmd_fixtures(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\nrerun with a larger --guard-override if the search is affordable\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
