#pragma once

#include <stdexcept>
#include <string>

namespace gof {

// Thrown when an input data set violates its contract (non-numeric tokens,
// values outside the declared support, empty input). The CLI maps this to
// exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown for invalid flag/option combinations resolved after parsing.
// The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gof
