#pragma once

#include <stdexcept>
#include <string>

namespace hyppoisson {

// Base type for every failure the library can signal.  The CLI maps these
// onto process exit codes, so keep the taxonomy flat and explicit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma function evaluated at (or within tolerance of) a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Lower 2F1 parameter c at a nonpositive integer: the series is undefined.
class ParameterPole : public Error {
 public:
  using Error::Error;
};

// A series or quadrature refinement hit its iteration cap before reaching
// the requested tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ZeroQuaternion : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Zonal grid used for integration before its measure constant was fitted.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

}  // namespace hyppoisson
