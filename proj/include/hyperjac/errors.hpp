#pragma once

#include <stdexcept>
#include <string>

namespace hyperjac {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed field contexts, division by zero, bad arguments.
struct DomainError : Error {
    using Error::Error;
};

// Curve validation failures.
struct DegenerateLeadingCoefficient : Error {
    using Error::Error;
};
struct SingularCurve : Error {
    using Error::Error;
};
struct UnsupportedField : Error {
    using Error::Error;
};

// Divisor construction failures (conjugate pairs, doubled Weierstrass points, ...).
struct InvalidDivisor : Error {
    using Error::Error;
};

// The rational genus-2 formulas do not apply; callers fall through to the
// general reduction or the reference path.
struct NotGeneric : Error {
    using Error::Error;
};

// The interpolation system degenerated (no usable kernel vector, or the
// denominator is not invertible modulo the result).
struct DegenerateInterpolant : Error {
    using Error::Error;
};

// A contract that the math guarantees was violated; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

// Text format problems. `line` is 0 when unknown.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    int line;
};

}  // namespace hyperjac
