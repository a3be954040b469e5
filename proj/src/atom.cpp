#include "dcsim/atom.hpp"

namespace dcsim {

AtomPreparation prepare_atom(AtomLevel level, ChoiceTime chosen_at) {
    return {level, chosen_at};
}

SuperSystemState SuperSystemState::single(PathState photon) {
    SuperSystemState s;
    s.single_ = std::move(photon);
    return s;
}

SuperSystemState SuperSystemState::pair(StateVector two_photon) {
    if (two_photon.space().factor_count() != 2 || !two_photon.space().has(kInitialPhoton) ||
        !two_photon.space().has(kNewPhoton))
        throw argument_error("two-photon state must span exactly the subsystems i and n");
    SuperSystemState s;
    s.two_photon_ = std::move(two_photon);
    return s;
}

const PathState& SuperSystemState::photon() const {
    if (!single_) throw argument_error("state holds two photons, not one");
    return *single_;
}

const StateVector& SuperSystemState::two_photon_state() const {
    if (!two_photon_) throw argument_error("state holds one photon, not two");
    return *two_photon_;
}

SuperSystemState interact(const PathState& photon, const AtomPreparation& atom) {
    if (atom.level != AtomLevel::excited_2) return SuperSystemState::single(photon);

    // |k>_path -> |k>_i (x) |k>_n by linearity: the emitted photon copies the
    // triggering photon's path mode and carries its accumulated phase.
    ProductSpace pair_space({{std::string(kInitialPhoton), 2}, {std::string(kNewPhoton), 2}});
    std::vector<Complex> amps(4, Complex{0.0, 0.0});
    const int both_upper = pair_space.flat_index(std::array{kUpperMode, kUpperMode});
    const int both_lower = pair_space.flat_index(std::array{kLowerMode, kLowerMode});
    amps[both_upper] = photon.amplitude(kUpperMode);
    amps[both_lower] = photon.amplitude(kLowerMode);
    return SuperSystemState::pair(StateVector(std::move(pair_space), std::move(amps)));
}

} // namespace dcsim
