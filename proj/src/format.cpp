#include "dcsim/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace dcsim {

std::string format_double(double value) {
    if (value == 0.0) return "0"; // canonicalize -0
    char buffer[64];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) break;
    }
    return buffer;
}

} // namespace dcsim
