#pragma once

#include <stdexcept>
#include <string>

namespace brunnian {

// Input text that does not parse, or structurally invalid arguments.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valid input outside the domain of the requested computation
// (repeated Milnor indices, non-Brunnian presentations, ...).
struct domain_refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: a convention clash or a bug, never user input.
struct integrity_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace brunnian
