#ifndef MONIDEAL_ERRORS_HPP
#define MONIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monideal {

// Operands live in different ambient rings.
struct RingMismatch : std::invalid_argument {
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Operation requires a proper, nonzero ideal.
struct NotProper : std::domain_error {
  explicit NotProper(const std::string& what) : std::domain_error(what) {}
};

// Input exceeds the desk-scale bounds the exact algorithms are built for.
struct TooLarge : std::length_error {
  explicit TooLarge(const std::string& what) : std::length_error(what) {}
};

// A constructor produced an ideal with no generators (e.g. Veronese with
// sum of bounds below the degree).
struct EmptyIdeal : std::domain_error {
  explicit EmptyIdeal(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " at line " + std::to_string(line_) +
                           ", column " + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

}  // namespace monideal

#endif
