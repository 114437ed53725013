#pragma once

// Text format for diagrams.
//
//   # comment
//   component: O1+ U2- A3 ...
//   component:
//
// One line per component. Classical passages are O<id><sign> or
// U<id><sign>; both passages of an id must carry the same sign. Double point
// passages are A<id> and B<id>. A bare "component:" is a crossing-free loop.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vconway/diagram.hpp"

namespace vconway {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the text format. Lexical problems and sign conflicts raise
/// ParseError (1-based line/column); structural problems are left to
/// validate().
Diagram parse_diagram(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error when it cannot be read.
Diagram load_diagram(const std::string& path);

/// One "component: ..." line per component, newline-terminated.
std::string format_diagram(const Diagram& d);

/// Single passage token, e.g. "O3-" or "A2".
std::string format_passage(const Diagram& d, const Passage& p);

}  // namespace vconway
