#pragma once

#include <stdexcept>
#include <string>

namespace ellrank {

// Values double as CLI exit codes.
enum class ErrorCode : int {
  parse = 2,
  degenerate = 3,
  bad_parameters = 4,
  bad_reduction = 5,
  resource_bound = 6,
  inconsistency = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorCode::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class DegenerateModel : public Error {
 public:
  explicit DegenerateModel(const std::string& msg) : Error(ErrorCode::degenerate, msg) {}
};

class BadParameters : public Error {
 public:
  explicit BadParameters(const std::string& msg) : Error(ErrorCode::bad_parameters, msg) {}
};

class BadReduction : public Error {
 public:
  explicit BadReduction(const std::string& msg) : Error(ErrorCode::bad_reduction, msg) {}
};

class ResourceBound : public Error {
 public:
  explicit ResourceBound(const std::string& msg) : Error(ErrorCode::resource_bound, msg) {}
};

/// Integer factorization gave up within its time budget.
class FactorTimeout : public ResourceBound {
 public:
  explicit FactorTimeout(const std::string& msg) : ResourceBound(msg) {}
};

class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& msg) : Error(ErrorCode::inconsistency, msg) {}
};

/// A fiber type or configuration outside what point counting supports.
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& msg) : Error(ErrorCode::bad_parameters, msg) {}
};

}  // namespace ellrank
