#pragma once

#include <stdexcept>
#include <string>

namespace dct {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input, schema violation, grade/dimension mismatch.  The CLI maps
// these to exit code 2; mathematical obstructions are ordinary return values.
struct input_error : error {
    using error::error;
};

} // namespace dct
