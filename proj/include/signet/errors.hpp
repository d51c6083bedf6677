#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace signet {

/// Bad command-line usage or invalid argument combinations. CLI exit code 1.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed or unusable input data. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse failure in an edge-list stream; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : DataError("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    std::size_t line_no;
};

/// An iterative solver ran out of iterations. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double last_delta_,
                     std::vector<double> residuals_ = {})
        : std::runtime_error(msg), last_delta(last_delta_), residuals(std::move(residuals_)) {}
    double last_delta;
    std::vector<double> residuals;  // best per-component residuals, when known
};

}  // namespace signet
