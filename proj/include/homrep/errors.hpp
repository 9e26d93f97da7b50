#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homrep {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its domain (disconnected graph, bad index,
/// invalid family parameters, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The automorphism group is larger than the caller-supplied cap.
class CapacityError : public Error {
 public:
  explicit CapacityError(std::size_t cap)
      : Error("automorphism group order exceeds cap " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Exact integer arithmetic would overflow the fixed-width scalar.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homrep
