#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dex {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input does not respect the declared schemas (undeclared relation, wrong
/// arity, source/target overlap, ...).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Syntax or semantic error in DSL text, with a 1-based location.
class ParseError : public Error {
public:
    ParseError(std::string origin, std::size_t line, std::size_t column, std::string message,
               std::string expected = {});

    const std::string& origin() const noexcept { return origin_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string expected_;
};

/// A configurable resource bound (chase steps, grounding size, search
/// nodes) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A query or setting was handed to an operation whose precondition it
/// violates (e.g. a non-positive query on the classical path).
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace dex
