#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace csf {

/// Base class for all numerical-domain errors raised by this library.
/// The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Function evaluated at (or too close to) a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& msg, std::complex<double> where)
      : Error(msg), where_(where) {}
  std::complex<double> where() const { return where_; }

 private:
  std::complex<double> where_;
};

/// Spectral parameter fails the genericity bound of a coefficient recursion.
class GenericityError : public Error {
 public:
  GenericityError(const std::string& msg, std::vector<int> mu_coords,
                  std::complex<double> denominator)
      : Error(msg), mu_coords_(std::move(mu_coords)), denominator_(denominator) {}
  const std::vector<int>& mu_coords() const { return mu_coords_; }
  std::complex<double> denominator() const { return denominator_; }

 private:
  std::vector<int> mu_coords_;
  std::complex<double> denominator_;
};

/// Point lies outside the domain required by the operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Argument sits on a branch cut and no side was specified.
class CutAmbiguityError : public Error {
 public:
  explicit CutAmbiguityError(const std::string& msg) : Error(msg) {}
};

/// A principal-branch requirement was violated (argument hit the cut).
class BranchError : public Error {
 public:
  explicit BranchError(const std::string& msg) : Error(msg) {}
};

/// Series or transformation scheme cannot converge for these parameters
/// (e.g. logarithmic parameter degeneracies, which are rejected rather
/// than implemented).
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature ran out of subdivisions. Carries the best value
/// obtained so far together with its error estimate.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& msg, std::complex<double> best_value,
              double err_estimate)
      : Error(msg), best_value_(best_value), err_estimate_(err_estimate) {}
  std::complex<double> best_value() const { return best_value_; }
  double err_estimate() const { return err_estimate_; }

 private:
  std::complex<double> best_value_;
  double err_estimate_;
};

/// Integrand returned a non-finite value; carries the sample point.
class NonFiniteError : public Error {
 public:
  NonFiniteError(const std::string& msg, double sample_point)
      : Error(msg), sample_point_(sample_point) {}
  double sample_point() const { return sample_point_; }

 private:
  double sample_point_;
};

/// A pairing was requested outside the local-integrability window.
class IntegrabilityError : public Error {
 public:
  explicit IntegrabilityError(const std::string& msg) : Error(msg) {}
};

/// Structural validation of user-supplied data failed.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace csf
