#pragma once

#include <stdexcept>
#include <string>

namespace divquat {

// Division by a quaternion whose squared norm is exactly zero. The test is
// exact equality with zero; near-singular conditioning is the caller's
// concern.
struct divisor_zero : std::domain_error {
    divisor_zero() : std::domain_error("divisor has zero squared norm") {}
};

// A binary64 quaternion component was NaN or infinite at a division entry
// point.
struct non_finite_input : std::domain_error {
    non_finite_input() : std::domain_error("non-finite quaternion component") {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct zero_denominator : parse_error {
    zero_denominator() : parse_error("rational denominator is zero") {}
};

struct dimension_mismatch : std::invalid_argument {
    explicit dimension_mismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

struct unknown_matrix_name : std::invalid_argument {
    explicit unknown_matrix_name(const std::string& name)
        : std::invalid_argument("unknown matrix name: " + name) {}
};

}  // namespace divquat
