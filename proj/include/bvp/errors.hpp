#pragma once

#include <stdexcept>
#include <string>

namespace bvp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameter outside its admissible range.
struct OutOfRange : Error {
    using Error::Error;
};

/// Expression text could not be parsed.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownIdentifier : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct UnknownFunction : SyntaxError {
    using SyntaxError::SyntaxError;
};

/// Domain fault while evaluating an expression (log of nonpositive,
/// sqrt of negative, 0^negative, ...).
struct EvalError : Error {
    using Error::Error;
};

/// Adaptive quadrature hit its recursion cap before meeting tolerance.
/// Carries the best estimate and the local error bound at the failure.
struct DepthExceeded : Error {
    double estimate;
    double error_bound;
    DepthExceeded(double est, double bound)
        : Error("adaptive quadrature exceeded max depth (estimate " +
                std::to_string(est) + ", error bound " + std::to_string(bound) + ")"),
          estimate(est), error_bound(bound) {}
};

/// Problem configuration file is malformed or inconsistent.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace bvp
