#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point outside the admissible region (inside the hemisphere, below the
// plane, invalid anisotropy, stencil crossing the boundary, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Green's function evaluated at coincident field and source points.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Numerical differentiation levels disagree beyond the accepted threshold.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A phase boundary could not be bracketed between disagreeing grid cells.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace vdw
