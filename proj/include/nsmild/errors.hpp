#pragma once

#include <stdexcept>
#include <string>

namespace nsmild {

// Parameter outside the range an operation is defined for.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input data rejected before any computation (non-finite samples etc).
struct RejectedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Spectral data violates Hermitian symmetry beyond tolerance.
struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested geometry does not fit inside the fundamental box.
struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inner iteration failed to contract; carries the last residual seen.
struct ConvergenceError : std::runtime_error {
    double last_residual;
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), last_residual(residual) {}
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureError : std::runtime_error {
    double achieved;
    QuadratureError(const std::string& what, double got)
        : std::runtime_error(what), achieved(got) {}
};

// Not enough valid data points for a regression.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nsmild
