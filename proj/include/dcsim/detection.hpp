#pragma once

// Photo-plate screen model: exact single-photon position distributions from a
// path density operator, seeded Monte Carlo sampling, and fringe-visibility
// estimation.
//
// The screen spans exactly one fringe period; x in [0, 1) in period units and
// the phase map is phi(x) = 2 pi x. Bin centers are where the pdf is
// evaluated, so a noiseless table fits its generating visibility exactly.

#include <cstdint>
#include <span>
#include <vector>

#include "dcsim/atom.hpp"
#include "dcsim/hilbert.hpp"

namespace dcsim {

struct ScreenModel {
    int bins = 64;
    double fringe_period = 1.0;

    bool operator==(const ScreenModel&) const = default;

    void validate() const;
    // Bin center in period units, (b + 1/2) / bins.
    double bin_x(int b) const { return (b + 0.5) / bins; }
    // Bin center in physical units.
    double bin_center(int b) const { return fringe_period * bin_x(b); }
};

// fixed: no momentum exchange with the plate, coherences survive.
// movable: full which-path correlation with the plate, coherences zeroed.
enum class PlateKind { fixed, movable };

struct DetectionRecord {
    std::vector<std::uint64_t> counts; // one entry per bin
    std::uint64_t total_detections = 0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

// Coherence-killing channel of the movable plate: off-diagonal terms zeroed.
DensityOperator dephase(const DensityOperator& rho);

// Discrete probability table over screen bins for one photon in path state
// `rho_path`: p(x) proportional to 1 + 2 Re(rho_12 e^{i 2 pi x}), normalized
// to sum 1. The movable plate dephases first, which flattens the table.
std::vector<double> position_pdf(const DensityOperator& rho_path, const ScreenModel& screen,
                                 PlateKind plate);

// Deterministic given the seed. One sample per shot for a single photon; two
// independent samples per shot (from the i and n reduced states, in that
// order) for the entangled pair, hence total_detections = 2 * shots.
DetectionRecord sample_detections(const SuperSystemState& state, const ScreenModel& screen,
                                  PlateKind plate, std::uint64_t shots, std::uint64_t seed);

// Shared sampling core: draws `shots` samples per listed pdf table into one
// histogram. Exposed so scenario code can sample from precomputed tables.
DetectionRecord sample_from_tables(std::span<const std::vector<double>> pdfs, std::uint64_t shots,
                                   std::uint64_t seed);

struct VisibilityEstimate {
    double value = 0.0;     // clamped to [0, 1]
    double std_error = 0.0;
};

// Least-squares fit of bin values to A (1 + V cos(2 pi x + delta)) over bin
// centers. Works on raw counts or on noiseless expected tables.
VisibilityEstimate fit_visibility(std::span<const double> bin_values);

// Fit on a detection record; requires >= 1000 detections for a meaningful
// estimate.
VisibilityEstimate visibility(const DetectionRecord& record);

} // namespace dcsim
