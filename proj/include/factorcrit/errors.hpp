#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factorcrit {

// Raised when an operation rejects its arguments (loops, out-of-range
// vertices, parameter triples that violate their invariants, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 or edge-list text. offset() is the byte position in the
// input where decoding stopped.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)),
        detail_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

  ParseError shifted(std::size_t delta) const { return {detail_, offset_ + delta}; }

 private:
  std::string detail_;
  std::size_t offset_;
};

}  // namespace factorcrit
