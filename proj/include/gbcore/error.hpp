#pragma once

#include <stdexcept>
#include <string>

#include "gbcore/types.hpp"

namespace gbcore {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes disagree. Carries both the expected and the offending shape.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(const std::string& what, Dimensions expected, Dimensions actual);

    Dimensions expected() const noexcept { return expected_; }
    Dimensions actual() const noexcept { return actual_; }

private:
    Dimensions expected_;
    Dimensions actual_;
};

class IndexOutOfBounds : public Error {
public:
    IndexOutOfBounds(const std::string& what, Index index, Index bound);

    Index index() const noexcept { return index_; }
    Index bound() const noexcept { return bound_; }

private:
    Index index_;
    Index bound_;
};

/// Operand scalar domain (or 0-element) does not match the operation's.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Strict build saw the same (row, col) twice.
class DuplicateEntry : public Error {
public:
    DuplicateEntry(Index row, Index col);
};

/// Invalid argument value: unknown names, values outside a semiring's
/// domain, malformed structures.
class ValueError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. what() reads "path:line: message".
class ParseError : public Error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& message);

    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

/// A library invariant was found broken. Indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace gbcore
