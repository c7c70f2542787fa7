#pragma once

#include <stdexcept>
#include <string>

namespace l2v {

/// Dimension or index mismatch between exact-arithmetic objects.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition (for example: converting a
/// non-differential-graded algebra to a crossed module).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure with a human-readable location (byte offset or JSON path).
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, const std::string& where)
        : std::runtime_error(where.empty() ? what : what + " [at " + where + "]"),
          location(where) {}
    std::string location;
};

} // namespace l2v
