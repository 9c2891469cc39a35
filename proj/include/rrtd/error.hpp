#pragma once

#include <stdexcept>
#include <string>

namespace rrtd {

// Exception hierarchy. The CLI maps these onto exit codes:
// UsageError -> 2, DataError/DomainError/Unreachable/UnsupportedSize -> 3,
// NumericError -> 4.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's mathematical domain (e.g. start == goal).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A target node cannot be reached from the source.
class Unreachable : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// graph6 decoding failure; carries the byte offset of the offending input.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DataError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rrtd
