#pragma once

#include <stdexcept>
#include <string>

#include "opar/simulator.hpp"

namespace opar {

/// Raised on malformed scenario configuration; the message names the
/// offending key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a JSON scenario description. Every key is optional except n_uavs
/// and n_flows; omitted keys take the documented defaults. Unknown keys and
/// invariant violations raise ConfigError naming the key.
ScenarioConfig parse_config_text(const std::string& text);

/// parse_config_text over the contents of `path`.
ScenarioConfig parse_config_file(const std::string& path);

/// Serializes a config back to JSON. parse_config_text(config_to_json(c))
/// reproduces `c` exactly.
std::string config_to_json(const ScenarioConfig& cfg);

std::string to_string(MobilityModel model);
std::string to_string(RoutingAlgorithm algorithm);

}  // namespace opar
