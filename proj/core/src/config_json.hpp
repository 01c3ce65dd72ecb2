#pragma once

// Internal: RunConfig <-> JSON used by config parsing and the manifest echo.
// Not installed.

#include <json.hpp>

#include "wdaug/config.hpp"

namespace wdaug {

nlohmann::ordered_json config_to_json(const RunConfig& config);

}  // namespace wdaug
