#pragma once

#include <stdexcept>

namespace cwl {

// Malformed graph data (valence, dangling darts, bad involution).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation applied outside its domain (odd leg count, repeated labels, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (b1 != 2, degree budget, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An engine computation disagreed with the closed form it must reproduce.
// Signals an orientation-convention bug, never bad user input.
struct CalibrationError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cwl
