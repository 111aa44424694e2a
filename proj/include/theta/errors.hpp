#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace theta {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver hit its cap. Carries the best iterate it had.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best, double residual)
      : std::runtime_error(what), best_(best), residual_(residual) {}

  std::complex<double> best_iterate() const { return best_; }
  double residual() const { return residual_; }

 private:
  std::complex<double> best_;
  double residual_;
};

/// Floating-point evaluation left the binary64 range.
class EvaluationOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Brute-force enumeration refused: the instance is over budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The xi fixed-point iteration escaped the disc certified by the Rouche triple.
class CertificateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result broke an ordering that must hold mathematically.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace theta
