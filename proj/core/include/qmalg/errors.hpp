#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmalg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: missing table entries, out-of-range indices,
/// dimension mismatches, malformed ideal candidates.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Structure constants that cannot be described by a quasi-multiplicative
/// symbolic table (mixed support, two targets for one V-slot placement...).
class QuasiMultViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by the brute-force minimality oracle when the instance is larger
/// than the configured enumeration bounds.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A property that the connection machinery guarantees did not hold.
/// Reaching this indicates a bug, not bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Syntax-level problem in an algebra or scheme document.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}
  ParseError(const std::string& message, std::string location)
      : Error(message), location_(std::move(location)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// JSON-pointer style location for semantic errors, empty otherwise.
  const std::string& location() const { return location_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::string location_;
};

}  // namespace qmalg
