#pragma once

#include <stdexcept>
#include <string>

namespace arcwalk {

/// Base class for all arcwalk errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor parameter is out of its documented range (e.g. path with n < 2).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An edge violates simplicity (self-loop).
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// A vertex ends up with degree zero after construction.
class IsolatedVertex : public Error {
 public:
  using Error::Error;
};

/// An arc does not belong to the graph.
class UnknownArc : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix dimensions do not match the arc space.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// |lambda| is too close to 1: sin(theta) vanishes and the spectral lift
/// would divide by (numerically) zero.
class DegenerateLift : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (dense materialization, exhaustive enumeration).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A vertex map does not preserve adjacency in both directions.
class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A sign assignment marks both an arc and its inverse.
class SignConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// A theorem-backed inequality failed at runtime.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace arcwalk
