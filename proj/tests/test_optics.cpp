// Optical elements and circuit evolution. The closed interferometer is
// checked against an explicit 2x2 matrix-product oracle built from literal
// matrices, independent of the library's element machinery.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dcsim/detection.hpp"
#include "dcsim/optics.hpp"
#include "support.hpp"

using dcsim::Complex;
using dcsim::OpticalElement;
using dcsim::PathState;
using testsupport::kInvSqrt2;

namespace {

constexpr double kPi = std::numbers::pi;

PathState balanced() { return PathState(Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}); }

// Literal oracle matrices.
std::array<Complex, 4> oracle_bs() {
    return {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0},
            Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}};
}

std::array<Complex, 4> oracle_phase(double phi) {
    return {Complex{1.0, 0.0}, Complex{}, Complex{}, Complex{std::cos(phi), std::sin(phi)}};
}

} // namespace

TEST_CASE("beam splitter turns a single mode into the balanced superposition") {
    const PathState out = beam_splitter(PathState::basis(dcsim::kUpperMode));
    CHECK(out.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(out.amplitude(2).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(out.probability(1) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(out.probability(2) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("beam splitter maps the balanced superposition back to mode 1") {
    const PathState out = beam_splitter(balanced());
    CHECK(std::abs(out.amplitude(1) - Complex{1.0, 0.0}) < 1e-13);
    CHECK(std::abs(out.amplitude(2)) < 1e-13);
}

TEST_CASE("beam splitter is an involution on random states") {
    dcsim::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto amps = testsupport::random_unit_vector(rng, 2);
        const PathState in(amps[0], amps[1]);
        const PathState out = beam_splitter(beam_splitter(in));
        CHECK(std::abs(out.amplitude(1) - amps[0]) < 1e-12);
        CHECK(std::abs(out.amplitude(2) - amps[1]) < 1e-12);
    }
}

TEST_CASE("mirror multiplies the targeted mode by a phase") {
    const PathState flipped = mirror(PathState::basis(1), 1, kPi);
    CHECK(std::abs(flipped.amplitude(1) - Complex{-1.0, 0.0}) < 1e-14);

    const PathState out = mirror(balanced(), 2, kPi);
    CHECK(out.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(out.amplitude(2).real() == doctest::Approx(-kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("equal mirror phases on both arms leave every detection statistic unchanged") {
    const dcsim::ScreenModel screen;
    dcsim::Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const auto amps = testsupport::random_unit_vector(rng, 2);
        const PathState in(amps[0], amps[1]);
        const double phase = rng.next_unit() * 2.0 * kPi;
        PathState reflected = mirror(in, 1, phase);
        reflected = mirror(reflected, 2, phase);

        const auto before = position_pdf(density_from_pure(in.state()), screen,
                                         dcsim::PlateKind::fixed);
        const auto after = position_pdf(density_from_pure(reflected.state()), screen,
                                        dcsim::PlateKind::fixed);
        for (int b = 0; b < screen.bins; ++b)
            CHECK(before[b] == doctest::Approx(after[b]).epsilon(1e-12));
        CHECK(in.probability(1) == doctest::Approx(reflected.probability(1)).epsilon(1e-12));
    }
}

TEST_CASE("mirror rejects unknown modes") {
    CHECK_THROWS_AS(mirror(balanced(), 3, 0.1), dcsim::lookup_error);
}

TEST_CASE("phase shift at phi = 0 is the identity") {
    const PathState out = phase_shift(balanced(), 0.0);
    CHECK(out.amplitude(1) == balanced().amplitude(1));
    CHECK(out.amplitude(2) == balanced().amplitude(2));
}

TEST_CASE("pi phase then beam splitter routes the balanced state to mode 2") {
    const PathState out = beam_splitter(phase_shift(balanced(), kPi));
    CHECK(std::abs(out.amplitude(1)) < 1e-13);
    CHECK(std::abs(std::abs(out.amplitude(2)) - 1.0) < 1e-13);

    // Same evolution through the literal matrix oracle.
    const auto oracle =
        testsupport::mat2_apply(testsupport::mat2_mul(oracle_bs(), oracle_phase(kPi)),
                                {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}});
    CHECK(std::abs(out.amplitude(1) - oracle[0]) < 1e-13);
    CHECK(std::abs(out.amplitude(2) - oracle[1]) < 1e-13);
}

TEST_CASE("phase shift is 2 pi periodic") {
    dcsim::Rng rng(33);
    const auto amps = testsupport::random_unit_vector(rng, 2);
    const PathState in(amps[0], amps[1]);
    for (double phi : {0.0, 0.7, kPi, 5.1}) {
        const PathState a = phase_shift(in, phi);
        const PathState b = phase_shift(in, phi + 2.0 * kPi);
        CHECK(std::abs(a.amplitude(2) - b.amplitude(2)) < 1e-12);
    }
}

TEST_CASE("every optical element matrix is unitary") {
    CHECK(dcsim::is_unitary(OpticalElement::beam_splitter().matrix()));
    for (double phi : {0.0, 0.3, kPi / 2, kPi, 4.9}) {
        CHECK(dcsim::is_unitary(OpticalElement::mirror(1, phi).matrix()));
        CHECK(dcsim::is_unitary(OpticalElement::mirror(2, phi).matrix()));
        CHECK(dcsim::is_unitary(OpticalElement::phase_shifter(phi).matrix()));
    }
}

TEST_CASE("empty circuit leaves the input unchanged") {
    const PathState out = apply_circuit(balanced(), {});
    CHECK(out.amplitude(1) == balanced().amplitude(1));
    CHECK(out.amplitude(2) == balanced().amplitude(2));
}

TEST_CASE("a lone beam splitter reproduces the post-split superposition") {
    const PathState out =
        apply_circuit(PathState::basis(1), {OpticalElement::beam_splitter()});
    CHECK(out.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(out.amplitude(2).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("closed interferometer output probabilities are (cos^2, sin^2) of phi/2") {
    for (double phi : {0.0, kPi / 4, kPi / 2, kPi}) {
        const PathState out = apply_circuit(
            PathState::basis(1), {OpticalElement::beam_splitter(),
                                  OpticalElement::phase_shifter(phi),
                                  OpticalElement::beam_splitter()});
        const double expected_1 = std::cos(phi / 2) * std::cos(phi / 2);
        CHECK(std::abs(out.probability(1) - expected_1) < 1e-12);
        CHECK(std::abs(out.probability(2) - (1.0 - expected_1)) < 1e-12);

        // Direct matrix-product oracle.
        const auto composite = testsupport::mat2_mul(
            oracle_bs(), testsupport::mat2_mul(oracle_phase(phi), oracle_bs()));
        const auto amp = testsupport::mat2_apply(composite, {Complex{1.0, 0.0}, Complex{}});
        CHECK(std::abs(out.probability(1) - std::norm(amp[0])) < 1e-14);
        CHECK(std::abs(out.probability(2) - std::norm(amp[1])) < 1e-14);
    }
}

TEST_CASE("random circuits preserve the norm") {
    dcsim::Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const auto amps = testsupport::random_unit_vector(rng, 2);
        PathState state(amps[0], amps[1]);

        std::vector<OpticalElement> circuit;
        const int length = 1 + static_cast<int>(rng.next_u64() % 6);
        for (int e = 0; e < length; ++e) {
            switch (rng.next_u64() % 3) {
                case 0: circuit.push_back(OpticalElement::beam_splitter()); break;
                case 1:
                    circuit.push_back(OpticalElement::mirror(
                        1 + static_cast<int>(rng.next_u64() % 2), rng.next_unit() * 2.0 * kPi));
                    break;
                default:
                    circuit.push_back(OpticalElement::phase_shifter(rng.next_unit() * 2.0 * kPi));
            }
        }
        const PathState out = apply_circuit(state, circuit);
        const double norm_sq = out.probability(1) + out.probability(2);
        CHECK(std::abs(norm_sq - 1.0) < 1e-12);
    }
}
