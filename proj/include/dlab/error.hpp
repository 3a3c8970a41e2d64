#pragma once

#include <stdexcept>

namespace dlab {

// Error categories thrown across the library. All derive from
// std::runtime_error so callers can catch broadly; the distinct types let
// tests and the CLI tell misuse apart from bad input files or numerical
// breakdown.

// Invalid arguments, shape mismatches, out-of-range options.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed container, invalid content (range violations, count mismatch).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unrecognized or inconsistent file layout (bad magic, version, sizes).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem and stream failures, truncated reads.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values produced during optimization.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dlab
