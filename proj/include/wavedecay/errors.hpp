#pragma once

#include <stdexcept>
#include <string>

namespace wavedecay {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A state left the configured admissible region.
struct NonAdmissibleState : Error {
    explicit NonAdmissibleState(const std::string& msg) : Error(msg) {}
};

// Newton iteration on the wave-curve map failed to converge.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// A simulation exceeded a configured cap (total variation, front count,
// event count). Carries the time at which the cap was hit.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, double when)
        : Error(msg), time(when) {}
    double time;
};

// Scenario file / CLI configuration problem.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace wavedecay
