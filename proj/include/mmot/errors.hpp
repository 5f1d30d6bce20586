#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmot {

/// Shape or sample-count violation (mismatched dimensions, empty inputs).
class SizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter outside its admissible range (negative variance, factor >= 1, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite value reached a place that requires finite data.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// API misuse that a correct caller never triggers (stale tape, state/shape drift).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Filesystem failure (unreadable path, short write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mmot
