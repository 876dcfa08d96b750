#include "revagg/manifest.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void RunManifest::add_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open input for checksum: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  inputs.emplace_back(path, sha256_hex(buf.str()));
}

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["arguments"] = arguments;
  j["seed"] = seed;
  nlohmann::json ins = nlohmann::json::array();
  for (const auto& [path, checksum] : inputs) {
    ins.push_back({{"path", path}, {"sha256", checksum}});
  }
  j["inputs"] = std::move(ins);
  j["tool_version"] = tool_version;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  return j.dump(2);
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write manifest: " + path);
  out << to_json() << "\n";
}

}  // namespace revagg
