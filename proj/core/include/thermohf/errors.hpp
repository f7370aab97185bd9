#pragma once

#include <stdexcept>
#include <string>

namespace thermohf {

/// Argument outside the mathematical domain of an operation (λ ≤ 0, empty spectrum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a structural contract, e.g. mismatched sequence lengths.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed: non-finite evaluation or an iteration that did not converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Problem size exceeds what a brute-force routine is willing to enumerate.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace thermohf
