#pragma once

#include <stdexcept>
#include <string>

namespace cssent {

// Base for all recoverable library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector shape mismatch.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid construction parameters (toric d < 2, bad QC exponents, ...).
struct ParameterError : Error {
    using Error::Error;
};

// Column weight > 2 where an incidence interpretation is required.
struct WeightError : Error {
    using Error::Error;
};

// Problem too large for the dense oracle.
struct SizeError : Error {
    using Error::Error;
};

// Transfer classification preconditions unmet.
struct ClassificationError : Error {
    using Error::Error;
};

// Unreadable/unwritable or malformed files.
struct IoError : Error {
    using Error::Error;
};

} // namespace cssent
