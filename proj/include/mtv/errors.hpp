#pragma once

#include <stdexcept>
#include <string>

namespace mtv {

// Caller broke a documented precondition (bad index, cap exceeded, bad flag).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// The requested sum does not converge for this input.
struct DivergenceError : std::domain_error {
    using std::domain_error::domain_error;
};

// The error bound could not be brought under the requested tolerance.
struct PrecisionUnachievable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mtv
