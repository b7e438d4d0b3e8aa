#pragma once

// Text documents describing a code.
//
//   n=3            # required first line
//   000            # binary string, position i is neuron i
//   {2,3}          # brace list
//   12             # digit subset, n <= 9 only
//
// Blank lines and '#' comments are ignored; one word per line.

#include <string>
#include <string_view>
#include <vector>

#include "neuralcode/code.hpp"

namespace neuralcode {

struct CodeDocument {
  int n = 0;
  std::vector<Codeword> words;  // as listed, duplicates removed
  std::string source;
  std::vector<std::string> warnings;
};

/// Throws ParseError with the offending line.
CodeDocument parse_document(std::string_view text, std::string source = "<stdin>");

/// Parses and validates. Convention violations (empty or full code) become
/// ParseError at the last line read.
Code parse_code(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Header plus one binary string per codeword; parse_code reads it back.
std::string render_code(const Code& code);

}  // namespace neuralcode
