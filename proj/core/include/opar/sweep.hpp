#pragma once

#include <string>
#include <vector>

#include "opar/simulator.hpp"

namespace opar {

/// One swept parameter with the values to visit and how many seeds to run
/// per value. Seeds count up from the base config's seed.
struct SweepSpec {
    enum class Parameter { W1, NFlows, NUavs, MobilityModel };

    Parameter parameter = Parameter::W1;
    std::vector<std::string> values;  // parsed per parameter kind
    int seeds_per_point = 1;
};

SweepSpec::Parameter parse_sweep_parameter(const std::string& name);
std::string to_string(SweepSpec::Parameter parameter);

/// Returns `base` with the swept parameter set to `value` (validates the
/// value, throws std::invalid_argument on a bad one).
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepSpec::Parameter parameter,
                                 const std::string& value);

/// Single-run CSV: a comment header echoing every config value, the summary
/// metrics, and the per-flow records. Byte-identical across repeated runs of
/// the same (config, seed).
std::string scenario_csv(const ScenarioConfig& cfg, const MetricsReport& report);

/// Sweep CSV: one row per (value, seed) plus one mean row per value, columns
/// parameter, seed, success_rate, weighted_throughput_mbps, mean_fct_s,
/// overhead_bytes, mean_reroutes. Scenario runs execute in parallel; row
/// order is fixed regardless of completion order.
std::string run_sweep(const ScenarioConfig& base, const SweepSpec& spec);

}  // namespace opar
