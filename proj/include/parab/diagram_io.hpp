#pragma once

#include "parab/grading.hpp"

#include <stdexcept>
#include <string>

namespace parab {

/// Parse failure with a 1-based column position into the input text.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
  int column;
};

/// Grammar: <family letter><decimal rank>[":"<mask>] with mask over {'*','x'}
/// of length rank. Whitespace is not allowed. Examples: "B4:**x*", "E7".
CrossedDiagram parse_diagram(const std::string& text);

/// Inverse of parse_diagram; always prints the mask form.
std::string print_diagram(const CrossedDiagram& d);

}  // namespace parab
