#pragma once

#include <stdexcept>
#include <string>

namespace z2cat {

// Malformed or out-of-contract input (dimension mismatch, bad JSON, ...).
struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented size cap was exceeded.
struct CapExceededError : InvalidInputError {
    explicit CapExceededError(const std::string& what) : InvalidInputError(what) {}
};

// A stated operation precondition does not hold (degenerate form, odd
// dimension, invalid cocycle, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A certificate or witness failed its defining equations on re-check.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace z2cat
