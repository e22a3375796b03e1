#pragma once

#include <stdexcept>

namespace cnoidal {

// Invalid parameter region (m out of range, sigma outside the admissible
// interval, lambda^2 <= 0 on the requested branch, ...).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Near-degenerate denominator (a ~ c, a*sigma ~ c).
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-difference stencil misuse (h <= 0).
class StencilError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A catalog family's inequality precondition fails.
class ConstraintError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A check is undefined for the given solution (d2 = 0).
class DegenerateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blow-up detected during time integration.
class StabilityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid solver configuration (non-power-of-two mode count, ...).
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cnoidal
