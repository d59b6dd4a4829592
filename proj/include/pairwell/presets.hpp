#pragma once

#include <string>
#include <vector>

#include "pairwell/config.hpp"

namespace pairwell {

/// Names of the built-in scenario presets, one per published figure panel.
std::vector<std::string> preset_names();

/// Resolved configuration of a named preset. Throws ConfigError for
/// unknown names.
ScenarioConfig make_preset(const std::string& name);

}  // namespace pairwell
