#pragma once

#include <stdexcept>
#include <string>

namespace wallx {

// Precondition or contract failure in an engine operation (division by a
// zero element, pole at an evaluation point, missing table entry, ...).
// Mapped to status/exit code 1 at the C API and CLI boundary.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (bad JSON, schema violation, invalid lattice
// file). Mapped to status/exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wallx
