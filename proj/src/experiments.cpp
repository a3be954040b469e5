#include "dcsim/experiments.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

namespace dcsim {

namespace {

// Both fixed mirrors reflect with the same phase, so they only contribute a
// global factor and leave the trajectory superposition intact.
constexpr double kMirrorPhase = std::numbers::pi;
constexpr std::string_view kMirrorSubsystem = "m";

// Half-silvered mirror, the two fixed mirrors, then the accumulated
// path-length phase.
PathState split_photon(double phi, bool with_fixed_mirrors) {
    PathState photon = beam_splitter(PathState::basis(kUpperMode));
    if (with_fixed_mirrors) {
        photon = mirror(photon, kUpperMode, kMirrorPhase);
        photon = mirror(photon, kLowerMode, kMirrorPhase);
    }
    return phase_shift(photon, phi);
}

// Second-kind mixture of a bipartite pure state: the statistical mixture of
// its Schmidt product terms, weighted by the squared coefficients. This is
// the sub-systemic description the photo plate resolves; for the entangled
// two-photon state it is exactly the paper-variant mixture of |11> and |22>.
DensityOperator schmidt_basis_mixture(const StateVector& state, std::string_view left,
                                      std::string_view right) {
    const SchmidtDecomposition schmidt = schmidt_decompose(state, left, right);
    const ProductSpace& space = state.space();
    const int left_pos = space.index_of(left);
    const int right_pos = space.index_of(right);
    const int dim_left = space.subsystems()[left_pos].dim;
    const int dim_right = space.subsystems()[right_pos].dim;

    std::vector<MixtureComponent> components;
    std::vector<int> modes(2);
    for (int k = 0; k < schmidt.rank(); ++k) {
        const double c = schmidt.coefficients[k];
        std::vector<Complex> amps(space.dimension(), Complex{0.0, 0.0});
        for (int a = 1; a <= dim_left; ++a) {
            for (int b = 1; b <= dim_right; ++b) {
                modes[left_pos] = a;
                modes[right_pos] = b;
                amps[space.flat_index(modes)] =
                    schmidt.left_vectors[k][a - 1] * schmidt.right_vectors[k][b - 1];
            }
        }
        components.push_back({c * c, StateVector(space, std::move(amps))});
    }
    return mix(components);
}

// Everything about a scenario that is exact (no sampling).
struct Evaluation {
    std::vector<std::vector<double>> headline_pdfs;
    std::optional<std::vector<std::vector<double>>> revival_pdfs;
    bool port_mode = false;
    std::optional<std::array<double, 2>> ports;
    std::optional<DensityOperator> rho_i;
    std::optional<DensityOperator> rho_n;
    double witness = 1.0;
    std::optional<double> entropy;
};

// Expected merged intensity shape over bins (all photons of one epoch).
std::vector<double> merged_table(const std::vector<std::vector<double>>& pdfs) {
    std::vector<double> merged(pdfs.front().size(), 0.0);
    for (const std::vector<double>& pdf : pdfs)
        for (std::size_t b = 0; b < merged.size(); ++b) merged[b] += pdf[b];
    for (double& v : merged) v /= static_cast<double>(pdfs.size());
    return merged;
}

Evaluation evaluate_single_photon(const PathState& photon, const ExperimentConfig& config) {
    Evaluation ev;
    const DensityOperator rho = density_from_pure(photon.state());
    ev.headline_pdfs.push_back(position_pdf(rho, config.screen, config.plate));
    if (config.plate == PlateKind::movable) {
        // The plate records the path, so the photon's effective operator at
        // detection is the dephased one.
        const DensityOperator effective = dephase(rho);
        ev.witness = super_systemic_witness(effective, photon.state());
        ev.rho_i = effective;
    } else {
        ev.rho_i = rho;
    }
    return ev;
}

Evaluation evaluate_paper_variant(const ExperimentConfig& config) {
    const PathState photon = split_photon(config.phi, true);
    const SuperSystemState super =
        interact(photon, prepare_atom(*config.atom_level, config.choice_time));
    if (super.photon_count() == 1) return evaluate_single_photon(super.photon(), config);

    Evaluation ev;
    const StateVector& pair = super.two_photon_state();
    const DensityOperator joint = density_from_pure(pair);
    DensityOperator rho_i = partial_trace(joint, kInitialPhoton);
    DensityOperator rho_n = partial_trace(joint, kNewPhoton);
    ev.headline_pdfs.push_back(position_pdf(rho_i, config.screen, config.plate));
    ev.headline_pdfs.push_back(position_pdf(rho_n, config.screen, config.plate));
    ev.witness = super_systemic_witness(
        schmidt_basis_mixture(pair, kInitialPhoton, kNewPhoton), pair);
    ev.entropy = entanglement_entropy(pair, kInitialPhoton, kNewPhoton);
    if (config.plate == PlateKind::movable) {
        ev.rho_i = dephase(rho_i);
        ev.rho_n = dephase(rho_n);
    } else {
        ev.rho_i = std::move(rho_i);
        ev.rho_n = std::move(rho_n);
    }
    return ev;
}

Evaluation evaluate_wheeler(const ExperimentConfig& config) {
    if (*config.interferometer_closed) {
        // Recombine at a second half-silvered mirror and read the two output
        // ports exactly.
        const PathState out = apply_circuit(
            PathState::basis(kUpperMode),
            {OpticalElement::beam_splitter(), OpticalElement::mirror(kUpperMode, kMirrorPhase),
             OpticalElement::mirror(kLowerMode, kMirrorPhase),
             OpticalElement::phase_shifter(config.phi), OpticalElement::beam_splitter()});
        Evaluation ev;
        ev.port_mode = true;
        ev.ports = {out.probability(kUpperMode), out.probability(kLowerMode)};
        ev.headline_pdfs.push_back({(*ev.ports)[0], (*ev.ports)[1]});
        ev.rho_i = density_from_pure(out.state());
        return ev;
    }
    return evaluate_single_photon(split_photon(config.phi, true), config);
}

Evaluation evaluate_marshall(const ExperimentConfig& config) {
    const double overlap = *config.mirror_overlap;
    const PathState photon = split_photon(config.phi, false);
    const Complex upper = photon.amplitude(kUpperMode);
    const Complex lower = photon.amplitude(kLowerMode);

    // Sub-period 1, von Neumann coupling |k>|m0> -> |k>|m_k> with pointer
    // states |m_1> = |1>_m and |m_2> = s|1>_m + sqrt(1-s^2)|2>_m.
    ProductSpace joint_space(
        {{std::string(kPathSubsystem), 2}, {std::string(kMirrorSubsystem), 2}});
    const int path_pos = joint_space.index_of(kPathSubsystem);
    const int mirror_pos = joint_space.index_of(kMirrorSubsystem);
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    std::vector<int> modes(2);
    auto put = [&](int path_mode, int mirror_mode, Complex value) {
        modes[path_pos] = path_mode;
        modes[mirror_pos] = mirror_mode;
        amps[joint_space.flat_index(modes)] = value;
    };
    put(kUpperMode, 1, upper);
    put(kLowerMode, 1, lower * overlap);
    put(kLowerMode, 2, lower * std::sqrt(1.0 - overlap * overlap));
    const StateVector correlated(joint_space, std::move(amps));

    Evaluation ev;
    const DensityOperator rho_photon =
        partial_trace(density_from_pure(correlated), kPathSubsystem);
    ev.headline_pdfs.push_back(position_pdf(rho_photon, config.screen, config.plate));
    ev.rho_i = config.plate == PlateKind::movable ? dephase(rho_photon) : rho_photon;
    ev.witness = super_systemic_witness(
        schmidt_basis_mixture(correlated, kPathSubsystem, kMirrorSubsystem), correlated);
    ev.entropy = entanglement_entropy(correlated, kPathSubsystem, kMirrorSubsystem);

    // Sub-period 2 inverts the coupling and de-correlates photon and mirror;
    // the photon returns to its pre-coupling state.
    ev.revival_pdfs = std::vector<std::vector<double>>{
        position_pdf(density_from_pure(photon.state()), config.screen, config.plate)};
    return ev;
}

Evaluation evaluate(const ExperimentConfig& config) {
    validate_config(config);
    switch (config.scenario) {
        case Scenario::paper_variant: return evaluate_paper_variant(config);
        case Scenario::wheeler: return evaluate_wheeler(config);
        case Scenario::marshall: return evaluate_marshall(config);
    }
    throw argument_error("unknown scenario");
}

ExperimentReport assemble(const ExperimentConfig& config, Evaluation ev) {
    ExperimentReport report;
    report.config = config;
    report.port_mode = ev.port_mode;
    report.port_probabilities = ev.ports;
    report.exact_pdfs = ev.headline_pdfs;
    report.record = sample_from_tables(ev.headline_pdfs, config.shots, config.seed);
    report.count_ratio = static_cast<double>(report.record.total_detections) /
                         static_cast<double>(report.record.shots);
    if (!ev.port_mode) {
        if (report.record.total_detections >= 1000) report.visibility = visibility(report.record);
        report.visibility_exact = fit_visibility(merged_table(ev.headline_pdfs)).value;
    }
    if (ev.revival_pdfs) {
        EpochResult revival;
        // Distinct deterministic substream for the second epoch.
        revival.record = sample_from_tables(*ev.revival_pdfs, config.shots, config.seed + 1);
        if (revival.record.total_detections >= 1000) revival.fitted = visibility(revival.record);
        revival.exact_visibility = fit_visibility(merged_table(*ev.revival_pdfs)).value;
        report.revival = std::move(revival);
        report.revival_pdfs = std::move(ev.revival_pdfs);
    }
    report.reduced_rho_i = std::move(ev.rho_i);
    report.reduced_rho_n = std::move(ev.rho_n);
    report.witness_value = ev.witness;
    report.entanglement_entropy_value = ev.entropy;
    return report;
}

void require_scenario(const ExperimentConfig& config, Scenario expected) {
    if (config.scenario != expected)
        throw config_error(std::string("config is not a ") + std::string(to_string(expected)) +
                           " scenario");
}

} // namespace

void validate_config(const ExperimentConfig& config) {
    if (config.shots == 0) throw config_error("shots must be >= 1");
    if (config.screen.bins < 8) throw config_error("bins must be >= 8");
    if (!(config.screen.fringe_period > 0.0))
        throw config_error("fringe_period must be positive");

    const bool needs_atom = config.scenario == Scenario::paper_variant;
    const bool needs_closed_flag = config.scenario == Scenario::wheeler;
    const bool needs_overlap = config.scenario == Scenario::marshall;

    if (needs_atom && !config.atom_level)
        throw config_error("paper_variant requires level (section [atom])");
    if (!needs_atom && config.atom_level)
        throw config_error("level applies only to the paper_variant scenario");
    if (needs_closed_flag && !config.interferometer_closed)
        throw config_error("wheeler requires interferometer_closed (section [optics])");
    if (!needs_closed_flag && config.interferometer_closed)
        throw config_error("interferometer_closed applies only to the wheeler scenario");
    if (needs_overlap && !config.mirror_overlap)
        throw config_error("marshall requires s (section [marshall])");
    if (!needs_overlap && config.mirror_overlap)
        throw config_error("s applies only to the marshall scenario");

    if (config.mirror_overlap && (*config.mirror_overlap < 0.0 || *config.mirror_overlap > 1.0))
        throw config_error("s must lie in [0, 1]");
    if (config.interferometer_closed && *config.interferometer_closed &&
        config.plate == PlateKind::movable)
        throw config_error(
            "plate = movable contradicts interferometer_closed = true (no screen after "
            "recombination)");
}

ExperimentReport run_paper_variant(const ExperimentConfig& config) {
    require_scenario(config, Scenario::paper_variant);
    return assemble(config, evaluate(config));
}

ExperimentReport run_wheeler(const ExperimentConfig& config) {
    require_scenario(config, Scenario::wheeler);
    return assemble(config, evaluate(config));
}

ExperimentReport run_marshall(const ExperimentConfig& config) {
    require_scenario(config, Scenario::marshall);
    return assemble(config, evaluate(config));
}

ExperimentReport run_scenario(const ExperimentConfig& config) {
    return assemble(config, evaluate(config));
}

std::vector<std::vector<double>> scenario_exact_tables(const ExperimentConfig& config) {
    Evaluation ev = evaluate(config);
    std::vector<std::vector<double>> tables = std::move(ev.headline_pdfs);
    if (ev.revival_pdfs)
        for (std::vector<double>& pdf : *ev.revival_pdfs) tables.push_back(std::move(pdf));
    return tables;
}

ChoiceInvarianceReport choice_invariance_check(const ExperimentConfig& config) {
    ChoiceInvarianceReport report;
    const std::array<ChoiceTime, 3> times = {ChoiceTime::before_split, ChoiceTime::in_flight,
                                             ChoiceTime::after_split};
    for (std::size_t k = 0; k < times.size(); ++k) {
        ExperimentConfig timed = config;
        timed.choice_time = times[k];
        report.tables[k] = scenario_exact_tables(timed);
    }

    auto bit_identical = [](const std::vector<std::vector<double>>& a,
                            const std::vector<std::vector<double>>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t) {
            if (a[t].size() != b[t].size()) return false;
            if (std::memcmp(a[t].data(), b[t].data(), a[t].size() * sizeof(double)) != 0)
                return false;
        }
        return true;
    };
    report.passed = bit_identical(report.tables[0], report.tables[1]) &&
                    bit_identical(report.tables[1], report.tables[2]);
    return report;
}

} // namespace dcsim
