#pragma once

// Optical elements as 2x2 unitaries on the photon path subspace, and
// sequential circuit evolution. The geometry of the interferometer is
// abstracted to an accumulated relative phase between the two path modes.

#include <array>
#include <span>
#include <string_view>

#include "dcsim/hilbert.hpp"

namespace dcsim {

// Path modes: 1 is the reflected/upper arm, 2 the transmitted/lower arm.
inline constexpr int kUpperMode = 1;
inline constexpr int kLowerMode = 2;
inline constexpr std::string_view kPathSubsystem = "path";

// A single photon on the two path modes.
class PathState {
  public:
    explicit PathState(StateVector state);
    PathState(Complex upper, Complex lower, std::string_view subsystem = kPathSubsystem);

    static PathState basis(int mode, std::string_view subsystem = kPathSubsystem);

    const StateVector& state() const { return state_; }
    std::string_view subsystem() const { return state_.space().subsystems().front().name; }
    Complex amplitude(int mode) const;
    double probability(int mode) const;

  private:
    StateVector state_; // exactly one dim-2 subsystem
};

enum class ElementKind { beam_splitter, mirror, phase_shifter };

// One element of an optical circuit; `matrix()` is its unitary in the
// (mode 1, mode 2) basis.
struct OpticalElement {
    ElementKind kind = ElementKind::beam_splitter;
    double phi = 0.0; // mirror reflection phase / relative phase shift
    int mode = kUpperMode;

    static OpticalElement beam_splitter();
    static OpticalElement mirror(int mode, double phi);
    static OpticalElement phase_shifter(double phi);

    std::array<Complex, 4> matrix() const; // row-major 2x2
};

// Balanced real beam splitter (1/sqrt 2)[[1, 1], [1, -1]]; self-inverse.
PathState beam_splitter(const PathState& state);

// Multiply the amplitude of `mode` by e^{i phi}. Equal phases on both arms
// leave every detection statistic unchanged.
PathState mirror(const PathState& state, int mode, double phi);

// Relative path-length phase: amplitude of mode 2 times e^{i phi}.
PathState phase_shift(const PathState& state, double phi);

// Left-fold application of `elements`; throws invariant_error if the
// composite matrix fails the unitarity check.
PathState apply_circuit(const PathState& state, std::span<const OpticalElement> elements);
PathState apply_circuit(const PathState& state, std::initializer_list<OpticalElement> elements);

// ||U^dagger U - I||_max < kAlgebraTol
bool is_unitary(const std::array<Complex, 4>& u);

} // namespace dcsim
