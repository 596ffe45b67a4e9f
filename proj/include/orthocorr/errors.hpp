#pragma once

#include <stdexcept>
#include <string>

namespace orthocorr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family parameters outside their admissible range (e.g. Jacobi alpha <= -1).
class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (e.g. weight outside the support).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A lower parameter of a series vanishes before the series terminates.
class IllPosedSeriesError : public Error {
 public:
  using Error::Error;
};

/// A series has no non-positive integer upper parameter.
class NotTerminatingError : public Error {
 public:
  using Error::Error;
};

/// Preconditions of a hypergeometric transformation are not met.
class TransformInapplicableError : public Error {
 public:
  using Error::Error;
};

/// A difference-equation stencil refers to a value that is not available.
class IncompleteStencilError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthocorr
