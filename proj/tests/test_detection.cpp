// Screen model: exact pdfs, seeded sampling, and the visibility fit. The
// fringe law V = 2|rho_12| is checked on noiseless tables; sampling is held
// to a 5-sigma per-bin consistency bound.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcsim/detection.hpp"
#include "support.hpp"

using dcsim::Complex;
using dcsim::DensityOperator;
using dcsim::DetectionRecord;
using dcsim::PathState;
using dcsim::PlateKind;
using dcsim::ProductSpace;
using dcsim::ScreenModel;
using dcsim::SuperSystemState;
using testsupport::kInvSqrt2;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DensityOperator path_operator(Complex upper_coherence, double p_upper) {
    return DensityOperator(ProductSpace({{"path", 2}}),
                           {Complex{p_upper, 0.0}, upper_coherence,
                            std::conj(upper_coherence), Complex{1.0 - p_upper, 0.0}});
}

DensityOperator balanced_pure() {
    return density_from_pure(PathState(Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}).state());
}

} // namespace

TEST_CASE("fixed-plate pdf of the balanced pure state is the normalized 1 + cos(2 pi x)") {
    const ScreenModel screen;
    const auto pdf = position_pdf(balanced_pure(), screen, PlateKind::fixed);

    double normalizer = 0.0;
    for (int b = 0; b < screen.bins; ++b) normalizer += 1.0 + std::cos(kTwoPi * screen.bin_x(b));
    for (int b = 0; b < screen.bins; ++b) {
        const double expected = (1.0 + std::cos(kTwoPi * screen.bin_x(b))) / normalizer;
        CHECK(std::abs(pdf[b] - expected) < 1e-12);
    }
    CHECK(dcsim::fit_visibility(pdf).value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("the 1/2 1/2 statistical operator produces a uniform table") {
    const ScreenModel screen;
    const auto pdf = position_pdf(path_operator(Complex{}, 0.5), screen, PlateKind::fixed);
    for (double p : pdf) CHECK(p == doctest::Approx(1.0 / screen.bins).epsilon(1e-13));
}

TEST_CASE("a movable plate flattens even a fully coherent state") {
    const ScreenModel screen;
    const auto pdf = position_pdf(balanced_pure(), screen, PlateKind::movable);
    for (double p : pdf) CHECK(p == doctest::Approx(1.0 / screen.bins).epsilon(1e-13));
}

TEST_CASE("pdfs sum to 1 for random operators, bin counts, and plates") {
    dcsim::Rng rng(61);
    for (int bins : {8, 32, 64, 101}) {
        const ScreenModel screen{bins, 1.0};
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho(ProductSpace({{"path", 2}}),
                                      testsupport::random_density_matrix(rng, 2));
            for (PlateKind plate : {PlateKind::fixed, PlateKind::movable}) {
                const auto pdf = position_pdf(rho, screen, plate);
                double total = 0.0;
                for (double p : pdf) total += p;
                CHECK(std::abs(total - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("noiseless-table visibility equals twice the path coherence") {
    const ScreenModel screen{32, 1.0};
    SUBCASE("real coherence 1/4 gives V = 1/2") {
        const auto pdf =
            position_pdf(path_operator(Complex{0.25, 0.0}, 0.5), screen, PlateKind::fixed);
        CHECK(dcsim::fit_visibility(pdf).value == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("random operators, bins >= 32") {
        dcsim::Rng rng(62);
        for (int trial = 0; trial < 50; ++trial) {
            const DensityOperator rho(ProductSpace({{"path", 2}}),
                                      testsupport::random_density_matrix(rng, 2));
            const auto pdf = position_pdf(rho, screen, PlateKind::fixed);
            const double expected = 2.0 * std::abs(rho.at(0, 1));
            CHECK(dcsim::fit_visibility(pdf).value == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("movable-plate pdf equals the fixed-plate pdf of the dephased operator, bin for bin") {
    dcsim::Rng rng(63);
    const ScreenModel screen;
    for (int trial = 0; trial < 20; ++trial) {
        const DensityOperator rho(ProductSpace({{"path", 2}}),
                                  testsupport::random_density_matrix(rng, 2));
        const auto movable = position_pdf(rho, screen, PlateKind::movable);
        const auto dephased = position_pdf(dcsim::dephase(rho), screen, PlateKind::fixed);
        for (int b = 0; b < screen.bins; ++b) CHECK(movable[b] == dephased[b]);
    }
}

TEST_CASE("two-photon sampling doubles the intensity and stays flat") {
    const ScreenModel screen;
    const SuperSystemState pair = SuperSystemState::pair(testsupport::entangled_pair_state());
    const std::uint64_t shots = 100000;
    const DetectionRecord record =
        sample_detections(pair, screen, PlateKind::fixed, shots, 42);

    CHECK(record.total_detections == 2 * shots);
    CHECK(record.shots == shots);

    const double p = 1.0 / screen.bins;
    const double bound = 5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(2 * shots));
    for (std::uint64_t count : record.counts) {
        const double freq = static_cast<double>(count) / static_cast<double>(2 * shots);
        CHECK(std::abs(freq - p) < bound);
    }
}

TEST_CASE("a single-mode photon has no coherence and lands uniformly") {
    const ScreenModel screen;
    const DetectionRecord record = sample_detections(
        SuperSystemState::single(PathState::basis(1)), screen, PlateKind::fixed, 100000, 7);
    CHECK(record.total_detections == record.shots);
    const double p = 1.0 / screen.bins;
    const double bound = 5.0 * std::sqrt(p * (1.0 - p) / 100000.0);
    for (std::uint64_t count : record.counts)
        CHECK(std::abs(static_cast<double>(count) / 100000.0 - p) < bound);
}

TEST_CASE("sampled fringe frequencies track the exact pdf within 5 sigma") {
    const ScreenModel screen;
    const SuperSystemState photon = SuperSystemState::single(
        PathState(Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}));
    const std::uint64_t shots = 100000;
    const DetectionRecord record =
        sample_detections(photon, screen, PlateKind::fixed, shots, 1234);
    const auto pdf = position_pdf(balanced_pure(), screen, PlateKind::fixed);
    for (int b = 0; b < screen.bins; ++b) {
        const double freq = static_cast<double>(record.counts[b]) / static_cast<double>(shots);
        const double bound = 5.0 * std::sqrt(pdf[b] * (1.0 - pdf[b]) / static_cast<double>(shots));
        CHECK(std::abs(freq - pdf[b]) < bound);
    }
}

TEST_CASE("identical seeds reproduce detection records bit for bit") {
    const ScreenModel screen;
    const SuperSystemState pair = SuperSystemState::pair(testsupport::entangled_pair_state());
    const DetectionRecord a = sample_detections(pair, screen, PlateKind::fixed, 20000, 99);
    const DetectionRecord b = sample_detections(pair, screen, PlateKind::fixed, 20000, 99);
    CHECK(a.counts == b.counts);
    CHECK(a.total_detections == b.total_detections);

    const DetectionRecord c = sample_detections(pair, screen, PlateKind::fixed, 20000, 100);
    CHECK(a.counts != c.counts);
}

TEST_CASE("zero shots is rejected") {
    const ScreenModel screen;
    CHECK_THROWS_AS(sample_detections(SuperSystemState::single(PathState::basis(1)), screen,
                                      PlateKind::fixed, 0, 1),
                    dcsim::argument_error);
}

TEST_CASE("the visibility fit needs at least 8 bins and 1000 detections") {
    const std::vector<double> tiny(4, 0.25);
    CHECK_THROWS_AS(dcsim::fit_visibility(tiny), dcsim::argument_error);

    DetectionRecord starved;
    starved.counts.assign(16, 10);
    starved.total_detections = 160;
    starved.shots = 160;
    CHECK_THROWS_AS(dcsim::visibility(starved), dcsim::argument_error);
}

TEST_CASE("exactly uniform counts fit to zero visibility") {
    DetectionRecord record;
    record.counts.assign(64, 5000);
    record.total_detections = 64 * 5000;
    record.shots = record.total_detections;
    const auto fit = dcsim::visibility(record);
    CHECK(fit.value == doctest::Approx(0.0).scale(1.0));
    CHECK(fit.std_error >= 0.0);
}

TEST_CASE("position_pdf rejects operators that are not single-path 2x2") {
    const dcsim::DensityOperator pair =
        density_from_pure(testsupport::entangled_pair_state());
    CHECK_THROWS_AS(position_pdf(pair, ScreenModel{}, PlateKind::fixed),
                    dcsim::argument_error);
}

TEST_CASE("screen invariants reject bad bin counts and periods") {
    CHECK_THROWS_AS((ScreenModel{4, 1.0}).validate(), dcsim::argument_error);
    CHECK_THROWS_AS((ScreenModel{64, 0.0}).validate(), dcsim::argument_error);
    CHECK_THROWS_AS((ScreenModel{64, -2.0}).validate(), dcsim::argument_error);
}
