#pragma once

#include <stdexcept>
#include <string>

namespace biortho {

/// Parameters outside the region where a family or identity is defined.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Gamma function (or Pochhammer denominator) evaluated at a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A moment integral that does not converge for the requested degree.
class DivergentMoment : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal series operation whose preconditions fail (e.g. zero constant term).
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical quadrature or summation that failed to reach its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biortho
