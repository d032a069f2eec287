#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: tables with out-of-range entries, wrong row lengths, bad
/// cycle strings, unparsable catalog text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation was asked to run above its configured size bound.
class BoundError : public Error {
 public:
  BoundError(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// Input that is well-formed but violates a mathematical precondition
/// (not a homomorphism, not a cycle base, core not trivial, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug or a
/// broken invariant upstream, never bad user input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybe
