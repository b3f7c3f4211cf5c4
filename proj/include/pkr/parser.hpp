#pragma once

#include <string>

#include "pkr/formula.hpp"

namespace pkr {

// Parses the formula grammar:
//   atoms [a-z][a-zA-Z0-9_]*, constants true/false,
//   ~ not, & and, | or, -> implies, <-> iff,
//   precedence ~ > & > | > -> > <->, binary connectives right-associative,
//   parentheses.
// `line` seeds the position used in parse_error messages.
Formula parse_formula(const std::string& text, int line = 1);

}  // namespace pkr
