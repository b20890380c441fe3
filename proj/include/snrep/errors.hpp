#pragma once

#include <stdexcept>
#include <string>

namespace snrep {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (e.g. mismatched weights).
struct PreconditionError : Error {
    using Error::Error;
};

/// An argument fell outside a formula's validity range; the message names the bound.
struct RangeError : Error {
    using Error::Error;
};

/// A size guard rejected the request before it could exhaust memory or time.
struct ResourceGuardError : Error {
    using Error::Error;
};

/// An exact-arithmetic postcondition failed. Always a bug, never bad input.
struct InvariantError : Error {
    using Error::Error;
};

/// An input document could not be parsed; the message carries field diagnostics.
struct ParseError : Error {
    using Error::Error;
};

/// A well-formed input with invalid semantics (weights not summing to 1, ...).
struct SemanticError : Error {
    using Error::Error;
};

} // namespace snrep
