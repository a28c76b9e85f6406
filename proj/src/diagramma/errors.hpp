#pragma once

#include <stdexcept>
#include <string>

namespace diagramma {

// Thrown by the text-format parsers (CGF, DGF, valence tables, the
// Manchester subset). line is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : std::move(message)),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Precondition violations: unknown ids, language mismatches, operations on
// ill-formed diagrams.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size guard of the brute-force oracle exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry embedding failed to satisfy the contact constraints.
class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diagramma
