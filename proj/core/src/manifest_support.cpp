#include "manifest_support.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "config_json.hpp"
#include "wdaug/error.hpp"
#include "wdaug/log.hpp"
#include "wdaug/rng.hpp"
#include "wdaug/version.hpp"

namespace wdaug::manifest {

using nlohmann::ordered_json;

std::string now_utc_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

void write_json_atomic(const ordered_json& j, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      throw UsageError("cannot write " + tmp.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
      throw UsageError("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void update_stage(const RunConfig& config, const std::string& stage,
                  ordered_json stage_body) {
  const std::filesystem::path path = config.out / "manifest.json";
  ordered_json manifest;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      in >> manifest;
    } catch (const nlohmann::json::parse_error&) {
      log::warn("existing manifest is malformed; starting a fresh one");
      manifest = ordered_json{};
    }
    if (!manifest.is_object()) manifest = ordered_json{};
  }
  ordered_json fresh;
  fresh["tool"] = kToolName;
  fresh["version"] = kVersion;
  fresh["generator"] = rng::kGeneratorName;
  fresh["seed"] = config.seed;
  fresh["updated_utc"] = now_utc_iso8601();
  fresh["config"] = config_to_json(config);
  fresh["stages"] = manifest.contains("stages") && manifest["stages"].is_object()
                        ? manifest["stages"]
                        : ordered_json::object();
  stage_body["completed_utc"] = now_utc_iso8601();
  fresh["stages"][stage] = std::move(stage_body);
  write_json_atomic(fresh, path);
}

}  // namespace wdaug::manifest
