#pragma once

// Sectioned key-value experiment configs: parsing with line-numbered
// diagnostics, strict unknown-key rejection, defaults, sweep expansion, and
// round-trip serialization.
//
// Sections and keys:
//   [experiment] scenario, shots, seed, choice_time
//   [atom]       level                      (paper_variant)
//   [optics]     phi, interferometer_closed (the latter wheeler-only)
//   [plate]      kind
//   [screen]     bins, fringe_period
//   [marshall]   s                          (marshall)
//   [sweep]      parameter, start, stop, steps

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcsim/experiments.hpp"

namespace dcsim {

struct SweepSpec {
    std::string parameter; // "phi" or "s"
    double start = 0.0;
    double stop = 0.0;
    int steps = 1; // number of grid points, endpoints included

    bool operator==(const SweepSpec&) const = default;
};

struct ParsedConfig {
    ExperimentConfig base;
    std::optional<SweepSpec> sweep;

    bool operator==(const ParsedConfig&) const = default;
};

ParsedConfig parse_config(const std::filesystem::path& path);
ParsedConfig parse_config_text(std::string_view text);

// Canonical text form; parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ParsedConfig& config);

// The grid of configs a sweep describes (a single config when no sweep
// section is present), with the swept parameter value per point.
struct SweepPoint {
    double parameter_value = 0.0;
    ExperimentConfig config;
};
std::vector<SweepPoint> expand_sweep(const ParsedConfig& config);

} // namespace dcsim
