#pragma once

#include <string>

namespace dcsim {

// Shortest decimal form that parses back to exactly the same double. Used
// everywhere a value must survive a serialize/parse round trip.
std::string format_double(double value);

} // namespace dcsim
