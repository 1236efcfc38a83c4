#pragma once

#include <stdexcept>
#include <string>

namespace triag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UniverseMismatch : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct InvalidSize : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// Raised by exact evaluation when a denominator (or log argument) vanishes
// at the sample point; callers resample.
struct DenominatorVanishes : Error {
    using Error::Error;
};

// Expression cannot be evaluated to a single exact rational (formal logs,
// non-integer exponents).
struct NonEvaluable : Error {
    using Error::Error;
};

struct CanonicalFormViolation : Error {
    using Error::Error;
};

struct NilindependenceViolation : Error {
    using Error::Error;
};

struct JacobiViolation : Error {
    using Error::Error;
};

struct ConditionViolated : Error {
    using Error::Error;
};

struct DegenerateExponent : Error {
    using Error::Error;
};

// A combined corner-determinant operator kept nonzero coefficients on the
// matrix-entry derivatives where cancellation was expected; carries the
// offending terms verbatim.
struct ResidualNDerivative : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

} // namespace triag
