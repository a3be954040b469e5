#include "dcsim/names.hpp"

#include <string>

namespace dcsim {

std::string_view to_string(Scenario s) {
    switch (s) {
        case Scenario::paper_variant: return "paper_variant";
        case Scenario::wheeler: return "wheeler";
        case Scenario::marshall: return "marshall";
    }
    return "?";
}

std::string_view to_string(AtomLevel level) {
    switch (level) {
        case AtomLevel::ground: return "ground";
        case AtomLevel::excited_1: return "excited_1";
        case AtomLevel::excited_2: return "excited_2";
    }
    return "?";
}

std::string_view to_string(PlateKind plate) {
    return plate == PlateKind::fixed ? "fixed" : "movable";
}

std::string_view to_string(ChoiceTime t) {
    switch (t) {
        case ChoiceTime::before_split: return "before_split";
        case ChoiceTime::in_flight: return "in_flight";
        case ChoiceTime::after_split: return "after_split";
    }
    return "?";
}

Scenario scenario_from_string(std::string_view name) {
    if (name == "paper_variant") return Scenario::paper_variant;
    if (name == "wheeler") return Scenario::wheeler;
    if (name == "marshall") return Scenario::marshall;
    throw lookup_error("unknown scenario '" + std::string(name) + "'");
}

AtomLevel atom_level_from_string(std::string_view name) {
    if (name == "ground") return AtomLevel::ground;
    if (name == "excited_1") return AtomLevel::excited_1;
    if (name == "excited_2") return AtomLevel::excited_2;
    throw lookup_error("unknown atom level '" + std::string(name) + "'");
}

PlateKind plate_from_string(std::string_view name) {
    if (name == "fixed") return PlateKind::fixed;
    if (name == "movable") return PlateKind::movable;
    throw lookup_error("unknown plate kind '" + std::string(name) + "'");
}

ChoiceTime choice_time_from_string(std::string_view name) {
    if (name == "before_split") return ChoiceTime::before_split;
    if (name == "in_flight") return ChoiceTime::in_flight;
    if (name == "after_split") return ChoiceTime::after_split;
    throw lookup_error("unknown choice time '" + std::string(name) + "'");
}

} // namespace dcsim
