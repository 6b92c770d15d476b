#pragma once

#include <stdexcept>
#include <string>

namespace lwaudit {

// Every failure the library reports derives from Error. The CLI maps the
// three families (precondition, accuracy, inconsistency) onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- precondition family ---------------------------------------------------

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PoleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidBracketError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The tracked function vanishes (to within the guard) on the path.
class OnPathZeroError : public PreconditionError {
 public:
  OnPathZeroError(const std::string& what, double re, double im)
      : PreconditionError(what), re_(re), im_(im) {}
  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }

 private:
  double re_;
  double im_;
};

/// A height T lies within the guard band of a critical-line zero ordinate.
class OrdinateCollisionError : public PreconditionError {
 public:
  OrdinateCollisionError(const std::string& what, double gamma)
      : PreconditionError(what), gamma_(gamma) {}
  double gamma() const noexcept { return gamma_; }

 private:
  double gamma_;
};

// --- accuracy family -------------------------------------------------------

class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Step halving hit its depth cap; a zero sits (numerically) on the path.
class ResolutionError : public AccuracyError {
 public:
  using AccuracyError::AccuracyError;
};

/// A value left the representable range of double.
class RangeError : public AccuracyError {
 public:
  using AccuracyError::AccuracyError;
};

// --- inconsistency family --------------------------------------------------

/// Independent counts disagree, or an input census is incomplete.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwaudit
