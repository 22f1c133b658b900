#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowzeta {

/// Raised by the text readers. `line()` is 1-based; 0 means "not tied to a
/// particular line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace flowzeta
