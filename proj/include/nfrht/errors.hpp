#pragma once

// Exception hierarchy. Configuration problems (ParseError, ValidationError)
// are distinct from runtime numerical failures (NumericError and children) so
// callers can map them onto separate exit codes or API statuses.
#include <stdexcept>
#include <string>

namespace nfrht {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Base for failures of the numerical machinery itself.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature exhausted its subdivision budget without meeting its
// tolerance target.
class NonConvergenceError : public NumericError {
 public:
  explicit NonConvergenceError(const std::string& what) : NumericError(what) {}
};

// The half-space response function was evaluated where it is not meaningful
// (no absorption in the bulk at this frequency).
class InvalidBulkError : public NumericError {
 public:
  explicit InvalidBulkError(const std::string& what) : NumericError(what) {}
};

// Resonance search could not bracket a sign change.
class NoRootError : public NumericError {
 public:
  explicit NoRootError(const std::string& what) : NumericError(what) {}
};

// Real-space oracle grid refinement stalled before reaching its tolerance.
class GridNotConvergedError : public NumericError {
 public:
  explicit GridNotConvergedError(const std::string& what) : NumericError(what) {}
};

// Analysis helpers reject degenerate inputs with these.
class InsufficientPointsError : public ValidationError {
 public:
  explicit InsufficientPointsError(const std::string& what) : ValidationError(what) {}
};

class NonPositiveValueError : public ValidationError {
 public:
  explicit NonPositiveValueError(const std::string& what) : ValidationError(what) {}
};

}  // namespace nfrht
