// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace bellsym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix failed one of the density-matrix conditions (self-adjointness,
// unit trace, positivity) or a positivity-dependent routine was fed a
// matrix with an eigenvalue below tolerance.
struct ValidationError : Error {
    using Error::Error;
};

struct NotHermitian : ValidationError {
    using ValidationError::ValidationError;
};

struct TraceNotOne : ValidationError {
    using ValidationError::ValidationError;
};

struct NotPositive : ValidationError {
    using ValidationError::ValidationError;
};

struct NotPSD : ValidationError {
    using ValidationError::ValidationError;
};

// The sampled linear system of the atomic-symmetry solve is inconsistent.
struct NoSolution : Error {
    using Error::Error;
};

// The requested epsilon-family parameters leave the physical region.
struct InfeasibleEpsilon : Error {
    using Error::Error;
};

// A matrix file (or embedded document) could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

// An unrecognized Bell-state kind, residual mode, or sweep choice name.
struct UnknownKind : Error {
    using Error::Error;
};

}  // namespace bellsym
