#include "siqm/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm::cli {

const std::vector<FlagSpec>& all_flags() {
  static const std::vector<FlagSpec> flags = {
      {"family", ValueType::Text, "harmonic | morse | selfsimilar"},
      {"q", ValueType::Number, "scaling factor q"},
      {"c", ValueType::Number, "remainder constant c (R = c a)"},
      {"a1", ValueType::Number, "family parameter a1 (lambda for harmonic, A for morse)"},
      {"c0", ValueType::Number, "leading series coefficient"},
      {"order", ValueType::Integer, "series order K"},
      {"levels", ValueType::Integer, "number of levels / truncation / lattice window"},
      {"grid-min", ValueType::Number, "left end of the grid"},
      {"grid-max", ValueType::Number, "right end of the grid"},
      {"grid-points", ValueType::Integer, "number of grid points"},
      {"z-re", ValueType::Number, "real part of z"},
      {"z-im", ValueType::Number, "imaginary part of z"},
      {"drive", ValueType::Text, "const:<f0> | pulse:<f0>,<t0>,<sigma>"},
      {"t-max", ValueType::Number, "final time"},
      {"dt", ValueType::Number, "initial time step"},
      {"phase-sign", ValueType::Text, "paper | conjugate"},
      {"suite", ValueType::Text, "shape-invariance | lattice-algebra | q-oscillator | dilation | matrix-identities"},
      {"w-perturb", ValueType::Number, "add eps x exp(-x^2/8) to W (failure-path testing)"},
      {"config", ValueType::Text, "JSON config file"},
      {"out", ValueType::Text, "output CSV path"},
      {"report", ValueType::Text, "JSON report path"},
  };
  return flags;
}

const FlagSpec& flag_spec(const std::string& name) {
  for (const auto& f : all_flags()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown flag --" + name);
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t stop = std::min(text.size(), byte > 0 ? byte - 1 : 0);
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json check_type(const FlagSpec& spec, const Json& value, const std::string& origin) {
  switch (spec.type) {
    case ValueType::Text:
      if (!value.is_string()) throw Error(ErrorKind::InvalidParameter, origin + ": '" + spec.name + "' must be a string");
      return value;
    case ValueType::Number:
      if (!value.is_number()) throw Error(ErrorKind::InvalidParameter, origin + ": '" + spec.name + "' must be a number");
      return value.get<double>();
    case ValueType::Integer: {
      if (!value.is_number()) throw Error(ErrorKind::InvalidParameter, origin + ": '" + spec.name + "' must be an integer");
      const double v = value.get<double>();
      if (v != std::floor(v)) throw Error(ErrorKind::InvalidParameter, origin + ": '" + spec.name + "' must be an integer");
      return static_cast<long long>(v);
    }
  }
  return value;
}

}  // namespace

Json load_config(const std::string& path, const std::vector<std::string>& allowed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidParameter, "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream os;
    os << path << ":" << line << ":" << column << ": malformed JSON";
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidParameter, path + ": config must be a JSON object");

  Json out = Json::object();
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::InvalidParameter, path + ": unknown key '" + key + "'");
    }
    out[key] = check_type(flag_spec(key), value, path);
  }
  return out;
}

Json parse_flag_value(const FlagSpec& spec, const std::string& raw) {
  if (spec.type == ValueType::Text) return raw;
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (raw.empty() || end != raw.c_str() + raw.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParameter, "--" + spec.name + " expects a number, got '" + raw + "'");
  }
  if (spec.type == ValueType::Integer) {
    if (v != std::floor(v)) throw Error(ErrorKind::InvalidParameter, "--" + spec.name + " expects an integer");
    return static_cast<long long>(v);
  }
  return v;
}

bool ParamSet::has(const std::string& key) const { return effective.contains(key); }

double ParamSet::number(const std::string& key, double fallback) const {
  return has(key) ? effective.at(key).get<double>() : fallback;
}

long long ParamSet::integer(const std::string& key, long long fallback) const {
  return has(key) ? effective.at(key).get<long long>() : fallback;
}

std::string ParamSet::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? effective.at(key).get<std::string>() : fallback;
}

Json ParamSet::to_json() const {
  Json j;
  j["effective"] = effective;
  j["config"] = config;
  j["flags"] = flags;
  if (!config_path.empty()) j["config_path"] = config_path;
  return j;
}

ParamSet merge_params(const Json& config, const std::map<std::string, std::string>& flags) {
  ParamSet p;
  p.config = config;
  p.effective = config;
  for (const auto& [name, raw] : flags) {
    const Json value = parse_flag_value(flag_spec(name), raw);
    p.flags[name] = value;
    p.effective[name] = value;
  }
  return p;
}

Json to_json(const FamilyDescriptor& d) {
  Json j;
  j["family"] = to_string(d.name);
  j["a1"] = d.a1;
  if (d.name == FamilyName::SelfSimilar) {
    j["q"] = d.q;
    j["c"] = d.c;
  }
  return j;
}

FamilyDescriptor descriptor_from_json(const Json& j) {
  FamilyDescriptor d;
  d.name = family_name_from_string(j.value("family", std::string("selfsimilar")));
  d.a1 = j.value("a1", d.name == FamilyName::Morse ? 2.5 : 1.0);
  d.q = j.value("q", 0.5);
  d.c = j.value("c", 1.0);
  return d;
}

PotentialFamily family_from_params(const ParamSet& params, double reach) {
  Json j = Json::object();
  for (const char* key : {"family", "a1", "q", "c"}) {
    if (params.has(key)) j[key] = params.effective.at(key);
  }
  const FamilyDescriptor d = descriptor_from_json(j);
  FamilyOptions options;
  options.continuation.horizon = std::max(options.continuation.horizon, 1.05 * reach);
  PotentialFamily family = PotentialFamily::from_descriptor(d, options);
  const double eps = params.number("w-perturb", 0.0);
  return eps != 0.0 ? family.with_perturbation(eps) : family;
}

Grid grid_from_params(const ParamSet& params, FamilyName family) {
  // wide enough for the slowly decaying upper self-similar states
  double lo = -40.0;
  double hi = 40.0;
  long long n = 8001;
  if (family == FamilyName::Harmonic) {
    lo = -10.0;
    hi = 10.0;
    n = 2001;
  } else if (family == FamilyName::Morse) {
    lo = -6.0;
    hi = 40.0;
    n = 4601;
  }
  return build_grid(params.number("grid-min", lo), params.number("grid-max", hi), params.integer("grid-points", n));
}

}  // namespace siqm::cli
