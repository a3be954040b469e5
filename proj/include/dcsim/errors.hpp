#pragma once

#include <stdexcept>
#include <string>

namespace dcsim {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor factors with overlapping subsystem names.
struct labeling_conflict_error : error {
    using error::error;
};

// Unknown subsystem name or path mode.
struct lookup_error : error {
    using error::error;
};

// A domain-type invariant failed (norm, Hermiticity, trace, positivity).
struct invariant_error : error {
    using error::error;
};

// Mixture weights do not sum to one.
struct normalization_error : error {
    using error::error;
};

// Invalid call argument (zero shots, too few bins, dimension mismatch).
struct argument_error : error {
    using error::error;
};

// Config-file problem. `line` is 0 when no line applies (missing file,
// cross-key validation).
struct config_error : error {
    config_error(const std::string& what, int line_number = 0)
        : error(what), line(line_number) {}
    int line;
};

} // namespace dcsim
