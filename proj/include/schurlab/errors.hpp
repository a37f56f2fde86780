#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

/// Malformed or out-of-contract input supplied by a caller.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands built over incompatible carriers (variable count, cutoff, size).
class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A configured desk-scale bound (matrix size, cutoff) was exceeded.
class BoundExceeded : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Exact polynomial division left a remainder. Raised only when an identity
/// that should hold does not, so it is a logic failure rather than bad input.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A derivative profile is too short to answer the question asked of it.
class UndecidableProfile : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace schurlab
