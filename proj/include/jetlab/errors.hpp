#ifndef JETLAB_ERRORS_HPP
#define JETLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// A divisor-variable function vanishes at the evaluation point.
struct PoleError : Error {
  using Error::Error;
};

// Truncation order of a germ too short for the requested jet.
struct InsufficientOrderError : Error {
  using Error::Error;
};

// A zero of the integrand's denominator lies on the sampled circle.
struct SingularCircleError : Error {
  using Error::Error;
};

// Q composed with the curve vanishes identically: the curve lies in the
// hypersurface and counting/proximity functions are undefined.
struct ContainmentError : Error {
  using Error::Error;
};

// Hyperplane family fails the general-position requirement.
struct InvalidArrangementError : Error {
  using Error::Error;
};

// An iterative numeric routine hit its node/iteration cap before reaching
// the requested tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace jetlab

#endif
