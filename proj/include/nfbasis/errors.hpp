#pragma once

#include <stdexcept>
#include <string>

namespace nfbasis {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (non-finite entries, shape mismatch,
/// bad tolerances, unparseable text).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// The input matrix does not have full column rank at the configured
/// rank tolerance, so no normal form exists.
class NotFullColumnRankError : public Error {
public:
    using Error::Error;
};

/// Single-column inputs are rejected unless the caller opts in.
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

/// A physical configuration hit a singularity (coincident bodies,
/// close approach during integration).
class SingularConfigurationError : public Error {
public:
    using Error::Error;
};

/// An internal invariant that should hold by construction was violated;
/// indicates a bug or numerically hopeless input, never a user mistake.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace nfbasis
