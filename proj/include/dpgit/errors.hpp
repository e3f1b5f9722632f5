#pragma once
#include <stdexcept>
#include <string>

namespace dpgit {

// Degenerate or out-of-contract mathematical input. CLI exit code 2.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Power-series precision ran out before a verdict was provable.
class TruncationError : public MathError {
 public:
  TruncationError() : MathError("raise truncation order") {}
};

// Malformed input text. CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column),
        bare_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  int line_;
  int column_;
  std::string bare_;
};

}  // namespace dpgit
