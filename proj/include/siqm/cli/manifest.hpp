#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace siqm::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::string version = kToolVersion;
  nlohmann::json tolerances = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> outputs;
  std::string timestamp;

  nlohmann::json to_json() const;
};

// UTC, e.g. 2026-10-16T09:30:00Z
std::string iso8601_now();

// <out>.manifest.json, else <report>.manifest.json, else siqm-<command>.manifest.json
std::string manifest_path(const std::string& command, const std::string& out, const std::string& report);

void write_manifest(const RunManifest& manifest, const std::string& path);
void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace siqm::cli
