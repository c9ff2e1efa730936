#pragma once

#include <stdexcept>
#include <string>

namespace lahkit {

// Bad mathematical input (negative factorial argument, zero constant term
// where a unit is required, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size/budget cap would be exceeded.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix has the wrong shape for the requested operation.
struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence is too short for the requested truncation.
struct insufficient_sequence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An output-matrix step would read outside the production-matrix truncation.
struct truncation_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Name does not belong to the registered indeterminate alphabet.
struct unknown_name : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial is not symmetric under permutation of the x variables.
struct not_symmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lukasiewicz path violates its height/label invariants.
struct invalid_path : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lahkit
