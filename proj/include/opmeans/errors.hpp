#pragma once

#include <stdexcept>
#include <string>

namespace opmeans {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* type_name() const noexcept { return "Error"; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* type_name() const noexcept override { return "DimensionError"; }
};

class ParameterError : public Error {
 public:
  using Error::Error;
  const char* type_name() const noexcept override { return "ParameterError"; }
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
  const char* type_name() const noexcept override { return "NumericalFailure"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* type_name() const noexcept override { return "ParseError"; }
};

/// Raised when a matrix that must be positive definite is not. Carries the
/// offending smallest eigenvalue.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, double min_eigenvalue)
      : Error(what + ": matrix is not positive definite (min eigenvalue " +
              std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  const char* type_name() const noexcept override { return "NotPositiveDefinite"; }

 private:
  double min_eigenvalue_;
};

/// Raised by claim checks when the supplied inputs violate the claim's
/// hypothesis (for example A <= B). Names the violated precondition.
class HypothesisNotMet : public Error {
 public:
  HypothesisNotMet(std::string hypothesis, double margin)
      : Error("hypothesis not met: " + hypothesis + " (margin " +
              std::to_string(margin) + ")"),
        hypothesis_(std::move(hypothesis)),
        margin_(margin) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }
  double margin() const noexcept { return margin_; }
  const char* type_name() const noexcept override { return "HypothesisNotMet"; }

 private:
  std::string hypothesis_;
  double margin_;
};

}  // namespace opmeans
