#include "pkr/clause.hpp"

#include <algorithm>

namespace pkr {

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::is_positive() const {
  return std::all_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.positive; });
}

bool Clause::is_tautology() const {
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i)
    if (lits_[i].atom == lits_[i + 1].atom) return true;
  return false;
}

std::vector<Atom> Clause::atoms() const {
  std::vector<Atom> out;
  for (const Literal& l : lits_)
    if (out.empty() || out.back() != l.atom) out.push_back(l.atom);
  return out;
}

Formula Clause::to_formula() const {
  std::vector<Formula> fs;
  fs.reserve(lits_.size());
  for (const Literal& l : lits_) {
    Formula v = Formula::Var(l.atom);
    fs.push_back(l.positive ? v : Formula::Not(v));
  }
  return disjunction_of(fs);
}

std::string to_string(const Clause& c) {
  return to_string(c.to_formula());
}

}  // namespace pkr
