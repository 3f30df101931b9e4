#pragma once

#include <stdexcept>
#include <string>

namespace mcens {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values (empty input, out-of-range k, non-square cost, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Two sets that must share sample ids do not.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Numerically unusable problem: singular normal equations, non-PD
// covariance, Sinkhorn kernel underflow, unmet marginal tolerance.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

// Statistics could not be fitted (empty or singleton class).
class FitError : public Error {
 public:
  using Error::Error;
};

// Training diverged (non-finite loss).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// A sample violates a per-sample precondition (e.g. zero-norm row).
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// File-format violations. Subclasses distinguish the failure mode.
class ParseError : public Error {
 public:
  using Error::Error;
};

class BadMagicError : public ParseError {
 public:
  using ParseError::ParseError;
};

class VersionMismatchError : public ParseError {
 public:
  using ParseError::ParseError;
};

class TruncatedFileError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonFiniteValueError : public ParseError {
 public:
  using ParseError::ParseError;
};

class CsvFormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Missing or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcens
