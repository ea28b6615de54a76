#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hf {

// Violated precondition of a library operation (zero polynomial where a
// nonzero one is required, element outside a morphism's domain, ...).
// The message names the precondition so callers can surface it directly.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input.  line/column are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    explicit parse_error(const std::string& what) : parse_error(what, 1, 1) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A bounded search ran out of budget.  Thrown instead of ever returning a
// silently truncated answer.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hf
