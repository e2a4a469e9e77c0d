#pragma once

// The declarative algebra input format:
//
//   [algebra]
//   name = f5-dual
//   field = F5            # or Q
//   basis = 1 x           # first entry is the unit
//   table =
//   1 0                   # row i*dim + j: coordinates of u_i * u_j
//   ...
//   [frobenius]
//   functional = 0 1
//   [options]             # optional
//   window = 4
//   engine = both         # formula | stable | both
//
// '#' starts a comment; entries are integers or fractions p/q.

#include <string>

#include "tatehoch/algebra.hpp"

namespace tatehoch {

/// Parse failure with a 1-based line anchor.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct AlgebraSpec {
  std::string name;
  Field field{Field::Q()};
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> table;
  std::vector<Rat> functional;
  int window{4};
  std::string engine{"both"};
  std::string source_text;  // verbatim file content, used for hashing
};

AlgebraSpec parse_algebra_spec(const std::string& text);
AlgebraSpec load_algebra_spec(const std::string& path);

}  // namespace tatehoch
