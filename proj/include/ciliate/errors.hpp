#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ciliate {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based token number and the token itself.
class ParseError : public Error {
public:
    ParseError(std::string token, std::size_t position, const std::string& what)
        : Error(what), token_(std::move(token)), position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// A value violates a type invariant (non-legal string, bad pattern, sdr on one identity...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A pointer identity or identity set is outside the domain an operation requires.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Precondition that is neither a domain nor a validation issue (e.g. empty input where nonempty is required).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A brute-force search was asked to run beyond its configured domain bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A graph does not have the path/cycle structure of a reduction graph.
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace ciliate
