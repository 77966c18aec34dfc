#pragma once

#include <stdexcept>

namespace dsg {

// Thrown when a computation would exceed a configured resource cap.
// Usage errors are std::invalid_argument, domain errors std::domain_error.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dsg
