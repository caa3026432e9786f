#ifndef RECSIM_CONFIG_HPP
#define RECSIM_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "recsim/distributions.hpp"
#include "recsim/engine.hpp"

namespace recsim {

// A scenario run as described by a config document: scenario name, seed,
// output directory and a scenario-specific parameter block. parse_config
// fills every default, so the stored parameters are fully resolved.
struct ScenarioConfig {
    std::string scenario = "Custom";
    uint64_t seed = 0;
    std::string output_dir = "out";
    nlohmann::json parameters;
};

// Throws std::invalid_argument with the offending key path on unknown keys,
// type mismatches and out-of-range values.
ScenarioConfig parse_config(const std::string& text);

nlohmann::json to_json(const ScenarioConfig& config);

// Runs the scenario and writes CSV/JSON outputs into output_dir.
// Returns 0 on success; throws on invalid configuration or I/O failure.
int run_scenario(const ScenarioConfig& config);

// PreferenceSpec <-> {"family": ..., <named parameters>}
nlohmann::json preference_to_json(const PreferenceSpec& spec);
PreferenceSpec preference_from_json(const nlohmann::json& j);

// Shortest-round-trip-safe formatting used for all CSV numeric output.
std::string format_double(double v);

} // namespace recsim

#endif
