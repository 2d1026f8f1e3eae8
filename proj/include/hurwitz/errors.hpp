#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Base error for the whole library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input or precondition failures: malformed tables, non-normal subgroups,
// invalid data.  CLI maps these to exit code 1.
struct validation_error : error {
    using error::error;
};

// An enumeration or linear-algebra job exceeded its budget.  Exit code 2.
struct budget_error : error {
    using error::error;
};

// An impossibility the input should have ruled out (e.g. a non-exact
// character rescaling on data that validated).  Indicates a bug upstream.
struct consistency_error : error {
    using error::error;
};

} // namespace hurwitz
