#pragma once

#include <stdexcept>
#include <string>

namespace hilbcoh {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition was violated or the input data is unusable
/// (mismatched variable sets, degenerate Gram matrix, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A closed-form identity was queried outside its validity window.
/// Callers may catch this and fall back to a direct computation.
struct OutOfWindowError : DomainError {
    using DomainError::DomainError;
};

/// A coefficient beyond the truncation order was requested, or a pipeline
/// was run with insufficient truncation. Never silently returns zero.
struct TruncationError : Error {
    using Error::Error;
};

/// An internal consistency check failed (non-integral count, negative
/// dimension, inconsistent table). Indicates a bug, not bad input.
struct InvariantError : Error {
    using Error::Error;
};

} // namespace hilbcoh
