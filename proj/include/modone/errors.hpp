#pragma once

#include <stdexcept>
#include <string>

namespace modone {

// Bad or inconsistent user input (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The adaptive-precision ceiling was hit before a decision was reached
// (CLI exit code 3).
struct precision_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant (CLI exit code 4).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct zero_polynomial : input_error {
    zero_polynomial() : input_error("zero polynomial not allowed here") {}
};

struct not_divisible : input_error {
    not_divisible() : input_error("polynomial division is not exact") {}
};

struct degree_too_large : input_error {
    explicit degree_too_large(int deg, int cap)
        : input_error("degree " + std::to_string(deg) +
                      " exceeds configured maximum " + std::to_string(cap)) {}
};

struct not_squarefree : input_error {
    not_squarefree() : input_error("polynomial must be squarefree") {}
};

}  // namespace modone
