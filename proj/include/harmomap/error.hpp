#pragma once

#include <stdexcept>
#include <string>

namespace harmomap {

/// Argument outside the domain of an operation (|z| >= 1, a outside (0, 1/n], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem hypothesis or operation precondition does not hold.
/// The message names the violated hypothesis.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series does not converge under the given parameters, or its tail
/// could not be bounded within the requested truncation.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma function evaluated at a pole (non-positive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadratic threshold degenerated to a linear equation.
class DegenerateQuadraticError : public std::runtime_error {
 public:
  DegenerateQuadraticError(const std::string& what, double single_root)
      : std::runtime_error(what), single_root_(single_root) {}

  [[nodiscard]] double single_root() const noexcept { return single_root_; }

 private:
  double single_root_;
};

}  // namespace harmomap
