#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netgrow {

// Bad model or experiment parameters (m, m0, t_final, realization count, ...).
class InvalidConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation applied to a graph that cannot satisfy it (no edges, disconnected,
// creator with too few neighbors).
class InvalidStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration exceeded its branch budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netgrow
