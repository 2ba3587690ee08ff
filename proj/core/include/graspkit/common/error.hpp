// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace grasp {

// Exit-code contract used by the CLI: 1 usage, 2 data, 3 numerical.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error {
    using Error::Error;
};

// Bad or malformed input: parse failures, out-of-range indices,
// dimension mismatches, missing files.
struct DataError : Error {
    using Error::Error;
};

// Numerical failure: degenerate configurations, divergence,
// non-separating rings.
struct NumericError : Error {
    using Error::Error;
};

struct UnsolvableFrameError : NumericError {
    using NumericError::NumericError;
};

struct DegenerateConfigError : NumericError {
    using NumericError::NumericError;
};

struct NonSeparatingRingError : NumericError {
    using NumericError::NumericError;
};

struct DivergedError : NumericError {
    using NumericError::NumericError;
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) return 1;
    if (dynamic_cast<const DataError*>(&e)) return 2;
    if (dynamic_cast<const NumericError*>(&e)) return 3;
    return 2;
}

}  // namespace grasp
