#pragma once

// Parameter handling for the siqm CLI. Values come from an optional JSON
// config file and from flags; flags win. Keys are the flag names without the
// leading dashes, e.g. {"family": "selfsimilar", "q": 0.5, "grid-min": -15}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "siqm/families.hpp"
#include "siqm/grid.hpp"

namespace siqm::cli {

using Json = nlohmann::json;

enum class ValueType { Number, Integer, Text };

struct FlagSpec {
  std::string name;
  ValueType type;
  std::string help;
};

const std::vector<FlagSpec>& all_flags();
const FlagSpec& flag_spec(const std::string& name);

// Throws invalid-parameter with line and column on malformed JSON, and on
// keys outside `allowed`.
Json load_config(const std::string& path, const std::vector<std::string>& allowed);

Json parse_flag_value(const FlagSpec& spec, const std::string& raw);

struct ParamSet {
  Json effective = Json::object();
  Json config = Json::object();
  Json flags = Json::object();
  std::string config_path;

  bool has(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;

  Json to_json() const;
};

ParamSet merge_params(const Json& config, const std::map<std::string, std::string>& flags);

Json to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const Json& j);

// Family from family/q/c/a1 (and w-perturb). Self-similar tables are extended
// to cover |x| <= reach.
PotentialFamily family_from_params(const ParamSet& params, double reach = 0.0);

// grid-min/grid-max/grid-points with per-family defaults.
Grid grid_from_params(const ParamSet& params, FamilyName family);

}  // namespace siqm::cli
