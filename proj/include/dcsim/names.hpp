#pragma once

// Canonical text names of the enum-valued config fields, shared by the
// config parser and the report writers.

#include <string_view>

#include "dcsim/atom.hpp"
#include "dcsim/detection.hpp"

namespace dcsim {

enum class Scenario { paper_variant, wheeler, marshall };

std::string_view to_string(Scenario s);
std::string_view to_string(AtomLevel level);
std::string_view to_string(PlateKind plate);
std::string_view to_string(ChoiceTime t);

// Each throws lookup_error on an unknown name.
Scenario scenario_from_string(std::string_view name);
AtomLevel atom_level_from_string(std::string_view name);
PlateKind plate_from_string(std::string_view name);
ChoiceTime choice_time_from_string(std::string_view name);

} // namespace dcsim
