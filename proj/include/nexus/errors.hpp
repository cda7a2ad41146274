#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nexus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An argument outside the documented domain (bad index, singular matrix, d < 2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A standard-basis computation exceeded its configured budget.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// The chosen linear form z0 fails one of the checkable genericity conditions.
class GenericityError : public Error {
public:
    using Error::Error;
};

/// User-supplied data contradicts itself or a theorem-level consequence.
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed; always indicates a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace nexus
