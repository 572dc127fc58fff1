#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktfree {

/// Bad argument value or shape (size mismatch, out-of-range vertex, domain violation).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural precondition on a graph input does not hold (e.g. a set that must be a clique is not).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input exceeds a vertex cap or an exact-search limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The request lies outside the range where an exact answer is known.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ktfree
