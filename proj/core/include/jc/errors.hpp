#pragma once

#include <stdexcept>
#include <string>

namespace jc {

// Invalid input: odd weights, sign constraints, malformed declarations.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The truncation window is too small for the requested computation, or a
// stabilization certificate could not be issued.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No closed-form ladder coefficient is known for the module, so no
// certificate can be issued. Callers may fall back to window-only mode.
class UnsupportedFamilyError : public TruncationError {
public:
    using TruncationError::TruncationError;
};

// An equality between smooth characters is needed but cannot be decided
// from their values at z; the caller must declare it.
class NeedRelationDeclaration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jc
