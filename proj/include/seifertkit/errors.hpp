#pragma once

#include <stdexcept>
#include <string>

namespace seifertkit {

// Shape mismatch between matrices, or a non-square matrix where a square one is required.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An S-move that cannot be applied to the given matrix.
class InvalidMoveError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (zero polynomial, asymmetric form, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Caller violated a documented precondition (parity of pretzel parameters, range of b, ...).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or unresolvable user input (knot specs, certificate text, catalog names).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace seifertkit
