#pragma once

#include <stdexcept>
#include <string>

namespace krein {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems. The CLI maps all of these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A group table, permutation set or relation matrix could not be assembled.
class ConstructionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A scheme (or data derived from one) breaks one of the scheme axioms.
class AxiomViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Numerical or certification failures. The CLI maps these to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A positivity certificate (Krein condition, complete positivity) failed.
class CertificationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterated channel drove the state to (numerically) zero trace.
class AbsorbedStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace krein
