#pragma once

#include "pgd/groupoid.hpp"
#include "pgd/layered.hpp"
#include "pgd/series.hpp"
#include "pgd/structure.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pgd {

/// {"ground": ["1","2","3"], "generators": [{"map": {"1": "2"}}, ...]}
PermutationGroupoid groupoid_from_json(const nlohmann::json& j);
/// Generators listed are all elements, in canonical order.
nlohmann::json groupoid_to_json(const PermutationGroupoid& g);

/// A structure file: plain finite structure, or a layered one when
/// "multiplicities" is present ({"0": "inf", "1": 5}; optional "block_equivalence").
struct StructureFile {
  std::vector<std::string> labels;
  RelationalStructure structure;
  std::optional<LayeredStructure> layered;
};
StructureFile structure_from_json(const nlohmann::json& j);

/// {"num": [c0, c1, ...], "den": [n1, ...]}; integers beyond 64 bits are written as strings.
nlohmann::json series_to_json(const RationalSeries& s);
RationalSeries series_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; ParseError carries the byte position.
nlohmann::json read_json_file(const std::string& path);
PermutationGroupoid load_groupoid(const std::string& path);
StructureFile load_structure(const std::string& path);

} // namespace pgd
