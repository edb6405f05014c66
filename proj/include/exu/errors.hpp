#pragma once

#include <stdexcept>
#include <string>

namespace exu {

// A guardrail (enumeration bound, table size, word overflow) was exceeded.
// The CLI maps this to exit code 3.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// The caller violated a documented precondition. CLI exit code 2.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// A lifting hypothesis does not hold: p = 2 or p divides e.
struct hypothesis_error : precondition_error {
    explicit hypothesis_error(const std::string& what) : precondition_error(what) {}
};

// The initial value is not a root of f modulo p.
struct not_a_root_error : precondition_error {
    explicit not_a_root_error(const std::string& what) : precondition_error(what) {}
};

// f'(a0) vanishes modulo p; the lift would not be unique.
struct singular_derivative_error : precondition_error {
    explicit singular_derivative_error(const std::string& what) : precondition_error(what) {}
};

// No closed form is implemented for this exponent; the brute-force oracle
// methods remain available.
struct unsupported_exponent_error : precondition_error {
    explicit unsupported_exponent_error(const std::string& what) : precondition_error(what) {}
};

// An exact identity failed inside a formula evaluation. This signals an
// implementation bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace exu
