#pragma once

#include <stdexcept>
#include <string>

namespace ratapprox {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid interval or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent measurement data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Argument inconsistent with the object it is applied to (e.g. rank too large).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A dense kernel (SVD, QZ, LU) failed or the problem is singular to working precision.
class KernelError : public Error {
 public:
  KernelError(const std::string& what, double condition_estimate = 0.0)
      : Error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// Realized model whose pencil is singular at the probe shifts.
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

/// Descriptor model whose E matrix cannot be inverted.
class ConversionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point at, or numerically indistinguishable from, a pole.
class PoleProximityError : public Error {
 public:
  PoleProximityError(const std::string& what, double x) : Error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

}  // namespace ratapprox
