#pragma once

// Scripted end-to-end scenarios: the stimulated-emission variant, Wheeler's
// original arrangement (open/closed, fixed/movable plate), the Marshall
// photon-mirror coupling with its visibility revival, and the choice-timing
// invariance check.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcsim/analysis.hpp"
#include "dcsim/atom.hpp"
#include "dcsim/detection.hpp"
#include "dcsim/names.hpp"

namespace dcsim {

struct ExperimentConfig {
    Scenario scenario = Scenario::paper_variant;
    std::optional<AtomLevel> atom_level;         // paper_variant only
    std::optional<bool> interferometer_closed;   // wheeler only
    std::optional<double> mirror_overlap;        // marshall only: s = <m1|m2>
    PlateKind plate = PlateKind::fixed;
    double phi = 0.0;
    ChoiceTime choice_time = ChoiceTime::in_flight;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 42;
    ScreenModel screen;

    bool operator==(const ExperimentConfig&) const = default;
};

// Throws config_error naming the offending field.
void validate_config(const ExperimentConfig& config);

// One sampled detection epoch with its fitted and noiseless visibilities.
struct EpochResult {
    DetectionRecord record;
    std::optional<VisibilityEstimate> fitted; // needs >= 1000 detections
    double exact_visibility = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;

    // Headline epoch (sub-period 1 for marshall, the only epoch otherwise).
    DetectionRecord record;
    std::optional<VisibilityEstimate> visibility; // absent for closed-port runs
    std::optional<double> visibility_exact;
    double count_ratio = 1.0;

    // Exact per-photon detection pdfs backing the sampled record; a single
    // {P_port1, P_port2} table when port_mode is set.
    std::vector<std::vector<double>> exact_pdfs;
    bool port_mode = false;
    std::optional<std::array<double, 2>> port_probabilities;

    // Marshall full-period revival epoch.
    std::optional<EpochResult> revival;
    std::optional<std::vector<std::vector<double>>> revival_pdfs;

    // Diagnostics. reduced_rho_i is the detected photon's effective path
    // operator; reduced_rho_n exists only when stimulated emission produced a
    // second photon. witness_value is the projector-witness value of the
    // sub-systemic (second-kind mixture) description against the exact state:
    // 1 when both coincide, 1/2 on the entangled pair's mixture.
    std::optional<DensityOperator> reduced_rho_i;
    std::optional<DensityOperator> reduced_rho_n;
    double witness_value = 1.0;
    std::optional<double> entanglement_entropy_value;
};

ExperimentReport run_paper_variant(const ExperimentConfig& config);
ExperimentReport run_wheeler(const ExperimentConfig& config);
ExperimentReport run_marshall(const ExperimentConfig& config);
ExperimentReport run_scenario(const ExperimentConfig& config);

// Every exact pdf table the scenario samples from, all epochs concatenated.
// This is the object the delayed-choice claim is tested on.
std::vector<std::vector<double>> scenario_exact_tables(const ExperimentConfig& config);

struct ChoiceInvarianceReport {
    bool passed = false;
    // Tables computed with choice_time = before_split, in_flight, after_split.
    std::array<std::vector<std::vector<double>>, 3> tables;
};

// Recomputes the exact tables under all three choice times with everything
// else fixed and requires them to be bit-identical.
ChoiceInvarianceReport choice_invariance_check(const ExperimentConfig& config);

} // namespace dcsim
