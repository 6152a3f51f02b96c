#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, UndeclaredName, MalformedDefeasible };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(format(kind, line, column, what)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(Kind kind, std::size_t line, std::size_t column,
                            const std::string& what) {
    const char* tag = kind == Kind::Syntax            ? "syntax error"
                      : kind == Kind::UndeclaredName  ? "undeclared name"
                                                      : "malformed defeasible axiom";
    return std::to_string(line) + ":" + std::to_string(column) + ": " + tag + ": " + what;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Raised when a query leaves the internally decidable fragment and no
// external oracle is configured.
class UnsupportedConstruct : public Error {
 public:
  using Error::Error;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

class OracleSpawnError : public OracleError {
 public:
  using OracleError::OracleError;
};

class OracleProtocolError : public OracleError {
 public:
  using OracleError::OracleError;
};

class OracleTimeout : public OracleError {
 public:
  using OracleError::OracleError;
};

class TableauLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ddl
