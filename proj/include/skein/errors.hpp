#ifndef SKEIN_ERRORS_HPP
#define SKEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skein {

// Bad input that a caller could have avoided: wrong surface, wrong level,
// division by zero, degenerate place where a regular one is required.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression text that does not match the grammar. Line and column are
// 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line, column;
};

// An internal identity or postcondition failed. Never expected; if thrown,
// the algebra itself is wrong and no result can be trusted.
class internal_check_error : public std::logic_error {
 public:
  explicit internal_check_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace skein

#endif
