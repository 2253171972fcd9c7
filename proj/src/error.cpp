#include "dex/error.hpp"

namespace dex {

namespace {

std::string render(const std::string& origin, std::size_t line, std::size_t column,
                   const std::string& message, const std::string& expected) {
    std::string out = origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
}

}  // namespace

ParseError::ParseError(std::string origin, std::size_t line, std::size_t column, std::string message,
                       std::string expected)
    : Error(render(origin, line, column, message, expected)),
      origin_(std::move(origin)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

}  // namespace dex
