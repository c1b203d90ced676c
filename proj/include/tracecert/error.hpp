#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracecert {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial text or JSON document.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An internal consistency check failed (a bug, not bad input).
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace tracecert
