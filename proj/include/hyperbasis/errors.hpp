#pragma once

#include <stdexcept>
#include <string>

namespace hyperbasis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument is outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation at a pole of the function.
struct PoleError : Error {
    using Error::Error;
};

// No available representation converged to the requested tolerance.
struct AccuracyError : Error {
    using Error::Error;
};

// 4F3 called without a terminating (non-positive integer) top parameter.
struct NonTerminatingError : Error {
    using Error::Error;
};

// A bottom parameter hits a non-positive integer inside the terminating sum.
struct BottomPoleError : Error {
    using Error::Error;
};

// Projection circle chosen where the reference Legendre value vanishes.
struct ProbeDegenerateError : Error {
    using Error::Error;
};

// Internal consistency violation (e.g. symbolic second-order terms failing
// to cancel in a commutator); signals an implementation bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace hyperbasis
