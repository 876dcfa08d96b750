#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace revagg {

inline constexpr const char* kToolVersion = "revagg 0.1.0";

// Every pipeline run emits one manifest next to its outputs: the command,
// its arguments, the seed, input checksums, tool version and timestamps.
// Timestamps live only here, so the outputs themselves stay byte-identical
// across reruns.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::string tool_version = kToolVersion;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;

  void add_input(const std::string& path);
  std::string to_json() const;
  void write(const std::string& path) const;
};

std::string iso8601_utc_now();

}  // namespace revagg
