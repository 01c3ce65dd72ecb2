#pragma once

// Internal: run-manifest assembly and atomic writes. Not installed.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wdaug/config.hpp"

namespace wdaug::manifest {

std::string now_utc_iso8601();

// Writes <path> atomically (temp file in the same directory, then rename).
void write_json_atomic(const nlohmann::ordered_json& j, const std::filesystem::path& path);

// Loads out/manifest.json when present (malformed files are discarded with a
// warning), refreshes the header (tool, version, generator, seed, config
// snapshot, updated timestamp), replaces the named stage entry, and writes
// the result back atomically.
void update_stage(const RunConfig& config, const std::string& stage,
                  nlohmann::ordered_json stage_body);

}  // namespace wdaug::manifest
