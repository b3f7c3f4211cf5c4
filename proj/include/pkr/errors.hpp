#pragma once

#include <stdexcept>
#include <string>

namespace pkr {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; line/column are 1-based.
struct parse_error : error {
  parse_error(const std::string& msg, int line_, int column_)
      : error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

// An enumeration bound was exceeded (alphabet too large, too many rules, ...).
struct capacity_error : error {
  using error::error;
};

// A formula mentions an atom outside the governing alphabet.
struct eval_error : error {
  using error::error;
};

// A precondition of an operation was violated.
struct contract_error : error {
  using error::error;
};

}  // namespace pkr
