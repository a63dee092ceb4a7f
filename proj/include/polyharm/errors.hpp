#ifndef POLYHARM_ERRORS_HPP
#define POLYHARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyharm {

// Base class for all library errors. The CLI maps each subclass to a
// documented exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported ambient dimension, point outside the ball, invalid argument
// ranges.
struct DomainError : Error {
    using Error::Error;
};

// Structurally bad inputs: degenerate grids, inconsistent trace sets,
// missing modes, malformed files.
struct InputError : Error {
    using Error::Error;
};

// Numerically unusable inputs: zero traces, overflow in phi/r^k,
// ill-conditioned derivative orders, coincident knots.
struct NumericError : Error {
    using Error::Error;
};

// The divergence example at C*R = 1; the boundary case is not resolved.
struct BoundaryCaseError : Error {
    using Error::Error;
};

} // namespace polyharm

#endif
