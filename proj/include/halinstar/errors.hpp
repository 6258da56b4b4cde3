#pragma once

#include <stdexcept>
#include <string>

namespace halinstar {

/// Malformed instance, list or coloring document. Carries the 1-based line
/// (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A precondition of the construction does not hold (|C| = 5, lists shorter than k,
/// Delta(T) < 3, ...). The algorithm declines to run; this is not a bug.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A counting inequality the construction relies on turned out false. Should
/// never fire on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace halinstar
