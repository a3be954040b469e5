#include "dcsim/optics.hpp"

#include <cmath>

namespace dcsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::array<Complex, 4> matmul(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

PathState apply_matrix(const PathState& s, const std::array<Complex, 4>& u) {
    const Complex a1 = s.amplitude(kUpperMode);
    const Complex a2 = s.amplitude(kLowerMode);
    return PathState(u[0] * a1 + u[1] * a2, u[2] * a1 + u[3] * a2, s.subsystem());
}

void require_path_mode(int mode) {
    if (mode != kUpperMode && mode != kLowerMode)
        throw lookup_error("unknown path mode " + std::to_string(mode));
}

} // namespace

PathState::PathState(StateVector state) : state_(std::move(state)) {
    if (state_.space().factor_count() != 1 || state_.space().subsystems().front().dim != 2)
        throw argument_error("PathState needs exactly one dim-2 subsystem");
}

PathState::PathState(Complex upper, Complex lower, std::string_view subsystem)
    : state_(ProductSpace({{std::string(subsystem), 2}}), {upper, lower}) {}

PathState PathState::basis(int mode, std::string_view subsystem) {
    require_path_mode(mode);
    return PathState(mode == kUpperMode ? 1.0 : 0.0, mode == kLowerMode ? 1.0 : 0.0, subsystem);
}

Complex PathState::amplitude(int mode) const {
    require_path_mode(mode);
    return state_.amplitude(mode - 1);
}

double PathState::probability(int mode) const { return std::norm(amplitude(mode)); }

OpticalElement OpticalElement::beam_splitter() { return {ElementKind::beam_splitter, 0.0, 0}; }

OpticalElement OpticalElement::mirror(int mode, double phi) {
    require_path_mode(mode);
    return {ElementKind::mirror, phi, mode};
}

OpticalElement OpticalElement::phase_shifter(double phi) {
    return {ElementKind::phase_shifter, phi, kLowerMode};
}

std::array<Complex, 4> OpticalElement::matrix() const {
    switch (kind) {
        case ElementKind::beam_splitter:
            return {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0},
                    Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}};
        case ElementKind::mirror: {
            const Complex factor = std::polar(1.0, phi);
            if (mode == kUpperMode) return {factor, Complex{}, Complex{}, Complex{1.0, 0.0}};
            return {Complex{1.0, 0.0}, Complex{}, Complex{}, factor};
        }
        case ElementKind::phase_shifter:
            return {Complex{1.0, 0.0}, Complex{}, Complex{}, std::polar(1.0, phi)};
    }
    throw argument_error("unknown optical element kind");
}

PathState beam_splitter(const PathState& state) {
    return apply_matrix(state, OpticalElement::beam_splitter().matrix());
}

PathState mirror(const PathState& state, int mode, double phi) {
    require_path_mode(mode);
    return apply_matrix(state, OpticalElement::mirror(mode, phi).matrix());
}

PathState phase_shift(const PathState& state, double phi) {
    return apply_matrix(state, OpticalElement::phase_shifter(phi).matrix());
}

bool is_unitary(const std::array<Complex, 4>& u) {
    // U^dagger U
    const std::array<Complex, 4> ud = {std::conj(u[0]), std::conj(u[2]),
                                       std::conj(u[1]), std::conj(u[3])};
    const std::array<Complex, 4> p = matmul(ud, u);
    return std::abs(p[0] - Complex{1.0, 0.0}) < kAlgebraTol &&
           std::abs(p[1]) < kAlgebraTol && std::abs(p[2]) < kAlgebraTol &&
           std::abs(p[3] - Complex{1.0, 0.0}) < kAlgebraTol;
}

PathState apply_circuit(const PathState& state, std::span<const OpticalElement> elements) {
    std::array<Complex, 4> composite = {Complex{1.0, 0.0}, Complex{},
                                        Complex{}, Complex{1.0, 0.0}};
    PathState out = state;
    for (const OpticalElement& e : elements) {
        const std::array<Complex, 4> u = e.matrix();
        out = apply_matrix(out, u);
        composite = matmul(u, composite);
    }
    if (!is_unitary(composite))
        throw invariant_error("composite circuit matrix is not unitary");
    return out;
}

PathState apply_circuit(const PathState& state, std::initializer_list<OpticalElement> elements) {
    return apply_circuit(state, std::span<const OpticalElement>(elements.begin(), elements.size()));
}

} // namespace dcsim
