#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critlab {

/// An operation was called on arguments outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is larger than an exhaustive routine is willing to handle.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed graph6 text. offset() is the index of the offending byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace critlab
