#pragma once

#include <stdexcept>

namespace bgap {

// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point argument lies outside [0,1]; the operators and the nonnegativity
// of the basis weights are only defined on the unit interval.
struct DomainError : Error {
    using Error::Error;
};

// A sample vector's length does not match the operator degree.
struct LengthMismatch : Error {
    using Error::Error;
};

// Fewer than three values, so no second difference exists.
struct TooShort : Error {
    using Error::Error;
};

// Polynomial not divisible by z^2: the generating-function products
// disagree at order 0 or 1, which signals an arithmetic bug.
struct NonDivisible : Error {
    using Error::Error;
};

// A gap coefficient came out negative for on-domain inputs; treated as an
// internal consistency failure, never as a reportable result.
struct NegativeCoefficient : Error {
    using Error::Error;
};

// Exact sampling requested for a float-only function.
struct UnsupportedExact : Error {
    using Error::Error;
};

// Malformed textual input: rationals, function specs, configuration.
struct ParseError : Error {
    using Error::Error;
};

// Division by an exact zero.
struct DivisionByZero : Error {
    using Error::Error;
};

// File emission failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace bgap
