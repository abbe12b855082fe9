#pragma once

#include <stdexcept>
#include <string>

namespace agorank {

/// Raised when input data violates a domain rule (bad profile, invalid
/// parameter range, malformed file contents). Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with file/line/column context. The location is baked into
/// the message so callers can just print what().
class ParseError : public ValidationError {
 public:
  ParseError(std::string file, long line, long column, const std::string& rule)
      : ValidationError(format(file, line, column, rule)),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  static std::string format(const std::string& file, long line, long column,
                            const std::string& rule);

  std::string file_;
  long line_;
  long column_;
};

/// Filesystem-level failure (missing input, unwritable output). Maps to CLI
/// exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace agorank
