#pragma once

// Exception types raised by the engine. Each names one failure mode so
// callers (and the CLI's exit-code mapping) can react precisely.

#include <stdexcept>
#include <string>

namespace lambdachar {

// Base class for every engine error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad caller input: malformed selector, parameter out of range, parse error.
struct InputError : Error {
    using Error::Error;
};

struct NotRational : Error {
    using Error::Error;
};

struct NonRationalMultiplicity : Error {
    using Error::Error;
};

struct NonIntegral : Error {
    using Error::Error;
};

struct NonIntegralDegree : Error {
    using Error::Error;
};

struct NotRationalCoefficients : Error {
    using Error::Error;
};

struct NotPeriodic : Error {
    using Error::Error;
};

struct NotOneDimensional : Error {
    using Error::Error;
};

struct NonIntegerExponent : Error {
    using Error::Error;
};

struct InvalidSubgroup : Error {
    using Error::Error;
};

struct MapInconsistent : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct NoModel : Error {
    using Error::Error;
};

struct MismatchedClasses : Error {
    using Error::Error;
};

// A class function that cannot be a genuine character, e.g. one whose
// exterior powers do not vanish above its degree.
struct NotACharacter : Error {
    using Error::Error;
};

// A table or class skeleton that violates a structural invariant.
struct InvalidTable : Error {
    using Error::Error;
};

} // namespace lambdachar
