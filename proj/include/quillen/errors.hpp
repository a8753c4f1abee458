#pragma once

#include <stdexcept>
#include <string>

namespace quillen {

// Error taxonomy. The CLI maps these onto exit codes:
// configuration -> 2, resource -> 3, verification mismatch -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: unsupported field size, unknown family, malformed flags.
struct ConfigError : Error {
    using Error::Error;
};

// A computation would exceed a configured cap. The message names the flag
// that raises the cap.
struct ResourceError : Error {
    using Error::Error;
};

// An element or subgroup is not contained where a precondition requires it.
struct MembershipError : Error {
    using Error::Error;
};

// Malformed generator, non-splitting extension, non-commuting kind set.
struct ConstructionError : Error {
    using Error::Error;
};

// Group-spec file could not be parsed; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

// A lemma's hypothesis fails, so the requested report is not applicable.
struct HypothesisError : Error {
    using Error::Error;
};

// Internal consistency failure (a bug, not a user error).
struct InternalError : Error {
    using Error::Error;
};

} // namespace quillen
