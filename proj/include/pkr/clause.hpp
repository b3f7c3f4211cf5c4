#pragma once

#include <string>
#include <vector>

#include "pkr/formula.hpp"

namespace pkr {

struct Literal {
  Atom atom;
  bool positive = true;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.atom == b.atom && a.positive == b.positive;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.atom != b.atom) return a.atom < b.atom;
    return a.positive < b.positive;
  }
};

// A set of literals read as a disjunction; the empty clause is false.
// Literals are kept sorted and duplicate-free.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t length() const { return lits_.size(); }
  bool is_positive() const;
  // Contains both polarities of some atom.
  bool is_tautology() const;
  std::vector<Atom> atoms() const;

  Formula to_formula() const;

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }

 private:
  std::vector<Literal> lits_;
};

std::string to_string(const Clause& c);

}  // namespace pkr
