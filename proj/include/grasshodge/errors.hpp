#ifndef GRASSHODGE_ERRORS_HPP
#define GRASSHODGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grasshodge {

/// Base class for invalid inputs to library operations.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMonotone : DomainError {
    using DomainError::DomainError;
};

struct NegativePart : DomainError {
    using DomainError::DomainError;
};

struct OutOfDiagram : DomainError {
    using DomainError::DomainError;
};

struct NotBounded : DomainError {
    using DomainError::DomainError;
};

struct NotTCore : DomainError {
    using DomainError::DomainError;
};

struct NotBoundedByTMinus1 : DomainError {
    using DomainError::DomainError;
};

struct EmptyPartition : DomainError {
    using DomainError::DomainError;
};

struct PreconditionViolated : DomainError {
    using DomainError::DomainError;
};

/// An enumeration would exceed the configured node cap.  Results are
/// never truncated silently; callers see this instead of a partial answer.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace grasshodge

#endif
