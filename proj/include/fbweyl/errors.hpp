#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fbweyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A callable returned a non-finite value (or threw) at `abscissa`.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A geometric hypothesis (K>0, k_h=1, H>0, embeddability radicand, ...)
/// does not hold for the input.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis " + hypothesis + " violated: " + detail),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Two independent routes to the same quantity disagree.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fbweyl
