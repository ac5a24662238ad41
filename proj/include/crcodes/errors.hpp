#pragma once

#include <stdexcept>
#include <string>

namespace crcodes {

// Malformed input: bad file contents, mismatched lengths, out-of-range arguments.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input that exceeds what this build is sized for.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace crcodes
