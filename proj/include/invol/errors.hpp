#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invol {

// Mathematical failure: singular matrix, invalid involution, point off the
// variety, mismatched structures. CLI maps these to exit code 1.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `pos` is a 0-based character offset into the
// offending string; callers that know a file/line prepend that context.
// CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Filesystem / schema problems with input files. CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace invol
