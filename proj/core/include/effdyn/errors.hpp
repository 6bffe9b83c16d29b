// errors.hpp — exception taxonomy shared by engines and the CLI

#pragma once

#include <stdexcept>
#include <string>

namespace effdyn {

// A dimension/feasibility guard was exceeded (e.g. brute-force engine asked for
// a Hilbert space it refuses to build). CLI maps this to exit code 3.
struct EngineGuardError : std::runtime_error {
    explicit EngineGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Propagation lost accuracy beyond the accepted drift. CLI maps this to exit code 4.
struct NumericalAbortError : std::runtime_error {
    explicit NumericalAbortError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace effdyn
