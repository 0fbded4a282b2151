#pragma once

#include <stdexcept>
#include <string>

namespace cubewalk {

// Dense storage or qubit-count limit exceeded.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph file. line is 1-based; 0 means the error is not tied to a line
// (e.g. the file could not be opened).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A backend produced fidelity below threshold where the parity criterion
// guarantees a perfect transfer. Signals an implementation bug, not a finding.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& what, std::string distribution_json)
        : std::runtime_error(what), distribution_json_(std::move(distribution_json)) {}

    const std::string& distribution_json() const { return distribution_json_; }

private:
    std::string distribution_json_;
};

}  // namespace cubewalk
