#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qstar {

/// Raised when caller-supplied parameters violate an operation's preconditions
/// (margins exceeding n, mismatched list lengths, malformed vectors, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in one of the text grammars, carrying the byte offset of the
/// first offending character.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qstar
