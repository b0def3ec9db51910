#pragma once

#include <stdexcept>
#include <string>

namespace rct {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence position or length requirement was violated.
struct length_error : error {
    using error::error;
};

// A node length is not a member of the declared level set.
struct level_mismatch : error {
    using error::error;
};

// Operation requires two distinct sequences.
struct equal_input : error {
    using error::error;
};

// Exhaustive verification would exceed the fixed enumeration budget.
struct budget_exceeded : error {
    using error::error;
};

// Experiment driver got an unsupported universe description.
struct unknown_universe : error {
    using error::error;
};

// Operation applied to a tree of the wrong kind or parameters.
struct kind_mismatch : error {
    using error::error;
};

// Malformed textual input (bitstrings, JSON payloads).
struct parse_error : error {
    using error::error;
};

// A structural invariant failed validation.
struct invariant_violation : error {
    using error::error;
};

} // namespace rct
