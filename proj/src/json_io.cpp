#include "pgd/json_io.hpp"

#include "pgd/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pgd {

using nlohmann::json;

namespace {

std::vector<std::string> read_labels(const json& ground) {
  std::vector<std::string> labels;
  if (ground.is_number_integer()) {
    int n = ground.get<int>();
    if (n < 0)
      throw ParseError("ground size must be non-negative");
    for (int i = 0; i < n; ++i)
      labels.push_back(std::to_string(i));
  } else if (ground.is_array()) {
    for (const auto& x : ground) {
      if (!x.is_string() && !x.is_number_integer())
        throw ParseError("ground labels must be strings or integers");
      labels.push_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
    }
  } else {
    throw ParseError("\"ground\" must be a size or a list of labels");
  }
  return labels;
}

int index_of(const std::map<std::string, int>& index, const json& label) {
  std::string key = label.is_string() ? label.get<std::string>() : label.dump();
  auto it = index.find(key);
  if (it == index.end())
    throw DomainError("point '" + key + "' is not in the ground set");
  return it->second;
}

} // namespace

PermutationGroupoid groupoid_from_json(const json& j) {
  try {
    auto labels = read_labels(j.at("ground"));
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!index.emplace(labels[i], static_cast<int>(i)).second)
        throw ParseError("duplicate ground label '" + labels[i] + "'");
    int n = static_cast<int>(labels.size());
    std::vector<LocalBijection> gens;
    for (const auto& gen : j.value("generators", json::array())) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [from, to] : gen.at("map").items())
        pairs.emplace_back(index_of(index, json(from)), index_of(index, to));
      gens.push_back(LocalBijection::from_pairs(n, pairs));
    }
    return close(gens, n, labels);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed groupoid JSON: ") + e.what());
  }
}

json groupoid_to_json(const PermutationGroupoid& g) {
  json gens = json::array();
  for (const auto& f : g.elements()) {
    json map = json::object();
    for (auto [a, b] : f.pairs())
      map[g.labels()[a]] = g.labels()[b];
    gens.push_back({{"map", map}});
  }
  return {{"ground", g.labels()}, {"generators", gens}};
}

StructureFile structure_from_json(const json& j) {
  try {
    StructureFile file;
    file.labels = read_labels(j.at("ground"));
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < file.labels.size(); ++i)
      index.emplace(file.labels[i], static_cast<int>(i));
    int n = static_cast<int>(file.labels.size());
    std::vector<Relation> rels;
    for (const auto& r : j.value("relations", json::array())) {
      Relation rel{r.at("name").get<std::string>(), r.at("arity").get<int>(), {}};
      for (const auto& t : r.at("tuples")) {
        Tuple tuple;
        for (const auto& e : t) {
          if (e.is_number_integer())
            tuple.push_back(e.get<int>());
          else
            tuple.push_back(index_of(index, e));
        }
        rel.tuples.push_back(std::move(tuple));
      }
      rels.push_back(std::move(rel));
    }
    file.structure = RelationalStructure(n, std::move(rels));
    if (j.contains("multiplicities")) {
      LayeredStructure l;
      l.quotient = file.structure;
      l.multiplicities.assign(n, std::optional<int>(1));
      std::vector<bool> seen(n, false);
      for (const auto& [key, value] : j.at("multiplicities").items()) {
        int i = index.count(key) ? index.at(key) : -1;
        if (i < 0)
          throw DomainError("multiplicity for unknown component '" + key + "'");
        seen[i] = true;
        if (value.is_string() && value.get<std::string>() == "inf")
          l.multiplicities[i] = std::nullopt;
        else
          l.multiplicities[i] = value.get<int>();
      }
      for (int i = 0; i < n; ++i)
        if (!seen[i])
          throw DomainError("missing multiplicity for component '" + file.labels[i] + "'");
      l.block_equivalence = j.value("block_equivalence", true);
      l.validate();
      file.layered = std::move(l);
    }
    return file;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed structure JSON: ") + e.what());
  }
}

namespace {

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& x) {
  if (x.is_number_integer())
    return Integer(x.get<long>());
  if (x.is_string())
    return Integer(x.get<std::string>());
  throw ParseError("series coefficients must be integers");
}

} // namespace

json series_to_json(const RationalSeries& s) {
  json num = json::array();
  for (const auto& c : s.numerator)
    num.push_back(integer_to_json(c));
  return {{"num", num}, {"den", s.denominator}};
}

RationalSeries series_from_json(const json& j) {
  try {
    RationalSeries s;
    for (const auto& c : j.at("num"))
      s.numerator.push_back(integer_from_json(c));
    s.denominator = j.at("den").get<std::vector<int>>();
    std::sort(s.denominator.begin(), s.denominator.end());
    trim(s.numerator);
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

PermutationGroupoid load_groupoid(const std::string& path) { return groupoid_from_json(read_json_file(path)); }

StructureFile load_structure(const std::string& path) { return structure_from_json(read_json_file(path)); }

} // namespace pgd
