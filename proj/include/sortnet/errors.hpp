#pragma once

#include <stdexcept>
#include <string>

namespace sortnet {

// A swap sequence that is not a sorting network (wrong length, position out
// of range, or composition different from the full reversal).
struct InvalidNetwork : std::runtime_error {
    explicit InvalidNetwork(const std::string& what) : std::runtime_error(what) {}
};

// Geometric or numeric input without the general-position / nondegeneracy
// properties an operation requires.
struct DegenerateConfiguration : std::runtime_error {
    explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine exhausted its budget before reaching its tolerance.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sortnet
