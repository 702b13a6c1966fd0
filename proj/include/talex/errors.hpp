#pragma once

#include <stdexcept>
#include <string>

namespace talex {

// Input text could not be parsed; carries a position when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t pos = std::string::npos)
        : std::runtime_error(std::move(msg)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// An exact division or unit-agreement that a convention guarantees has failed.
// Signals a convention bug rather than bad input.
class ConventionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division requested for a non-divisible pair.
class DivisionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric routine failed to converge within its budget.
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace talex
