#pragma once

#include <stdexcept>
#include <string>

namespace mqs {

// Violated precondition or incompatible operands (level mismatch, bad index).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed textual input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mqs
