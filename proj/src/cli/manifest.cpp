#include "siqm/cli/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "siqm/error.hpp"

namespace siqm::cli {

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["version"] = version;
  j["tolerances"] = tolerances;
  j["results"] = results;
  j["outputs"] = outputs;
  j["timestamp"] = timestamp;
  return j;
}

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string manifest_path(const std::string& command, const std::string& out, const std::string& report) {
  if (!out.empty()) return out + ".manifest.json";
  if (!report.empty()) return report + ".manifest.json";
  return "siqm-" + command + ".manifest.json";
}

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::InvalidParameter, "cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

void write_manifest(const RunManifest& manifest, const std::string& path) { write_json(manifest.to_json(), path); }

}  // namespace siqm::cli
