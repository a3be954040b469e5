#pragma once

// The three-level atom's preparation and its two prescribed interaction
// behaviors with a path-superposed photon: identity (level 1 / ground) and
// deterministic stimulated emission of a path-copying second photon (level 2).

#include <optional>
#include <string_view>

#include "dcsim/hilbert.hpp"
#include "dcsim/optics.hpp"

namespace dcsim {

// Subsystem names of the two photons after stimulated emission. "Initial"
// and "new" are formal tags; the photons are indistinguishable.
inline constexpr std::string_view kInitialPhoton = "i";
inline constexpr std::string_view kNewPhoton = "n";

enum class AtomLevel { ground, excited_1, excited_2 };

// When the arrangement was selected relative to the photon's flight. Pure
// metadata: it never enters the evolution, which is what the timing
// invariance check asserts.
enum class ChoiceTime { before_split, in_flight, after_split };

struct AtomPreparation {
    AtomLevel level = AtomLevel::excited_1;
    ChoiceTime chosen_at = ChoiceTime::in_flight;
};

AtomPreparation prepare_atom(AtomLevel level, ChoiceTime chosen_at = ChoiceTime::in_flight);

// Either the unchanged single photon or the entangled two-photon state
// produced by stimulated emission. The photon count is explicit.
class SuperSystemState {
  public:
    static SuperSystemState single(PathState photon);
    static SuperSystemState pair(StateVector two_photon); // subsystems {i, n}

    int photon_count() const { return two_photon_ ? 2 : 1; }
    const PathState& photon() const;
    const StateVector& two_photon_state() const;

  private:
    SuperSystemState() = default;
    std::optional<PathState> single_;
    std::optional<StateVector> two_photon_;
};

// excited_2: the isometry |k> -> |k>_i (x) |k>_n applied by linearity
// (certain stimulated emission, the new photon copies the path mode).
// excited_1 and ground: identity on the photon.
SuperSystemState interact(const PathState& photon, const AtomPreparation& atom);

} // namespace dcsim
