#pragma once

#include <stdexcept>
#include <string>

namespace bfsvm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed inputs: mismatched dimensions, ragged tables, missing pieces.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Values outside their admissible domain (gamma <= 0, z outside [0,1], ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Bad run configuration: impossible fold counts, empty grids, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Problems with external data: files, parsing, archives.
class DataError : public Error {
 public:
  using Error::Error;
};

class MissingColumnError : public DataError {
 public:
  explicit MissingColumnError(const std::string& column)
      : DataError("missing column: " + column), column_(column) {}
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

/// Cell-level CSV failure; row is 1-based counting the header as row 1.
class CsvParseError : public DataError {
 public:
  CsvParseError(const std::string& what, std::size_t row, const std::string& column)
      : DataError(what + " (row " + std::to_string(row) + ", column " + column + ")"),
        row_(row),
        column_(column) {}
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

class ChecksumError : public DataError {
 public:
  using DataError::DataError;
};

class VersionError : public DataError {
 public:
  using DataError::DataError;
};

/// A task with no usable two-class structure (all labels equal, alpha == 0, ...).
class DegenerateTaskError : public Error {
 public:
  using Error::Error;
};

}  // namespace bfsvm
