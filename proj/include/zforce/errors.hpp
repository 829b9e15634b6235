#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zforce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge list, matrix text, family spec).
class ParseError : public Error
{
public:
    ParseError(const std::string & message, std::size_t offset)
        : Error(message + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    explicit ParseError(const std::string & message) : Error(message) {}

    [[nodiscard]] auto offset() const noexcept -> std::size_t { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// An input exceeds a configured or representational size limit.
class SizeLimitError : public Error
{
public:
    using Error::Error;
};

/// A precondition on arguments was not met.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// A mathematical invariant that must always hold was observed to fail.
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

} // namespace zforce
