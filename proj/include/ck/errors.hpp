#pragma once

#include <stdexcept>
#include <string>

namespace ck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (negative time, r beyond π on
/// the sphere, mismatched jets, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a zero of the radial weight, where the
/// dimension-raising operator is only defined as a limit.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The contour of a Bromwich-type integral meets a singularity of the
/// integrand; the caller should move the abscissa.
class ContourError : public Error {
 public:
  using Error::Error;
};

/// A quadrature did not reach its tolerance. Carries the best estimate so
/// callers can still report a partial result.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double err_estimate)
      : Error(what), best_estimate_(best_estimate), err_estimate_(err_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_estimate_;
  double err_estimate_;
};

}  // namespace ck
