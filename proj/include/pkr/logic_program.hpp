#pragma once

#include <vector>

#include "pkr/semantics.hpp"

namespace pkr {

// head :- positive_body, not negative_body. Bodies are kept sorted and
// duplicate-free; facts have empty bodies.
struct ProgramRule {
  ProgramRule() = default;
  ProgramRule(Atom head, std::vector<Atom> positive, std::vector<Atom> negative);

  Atom head;
  std::vector<Atom> positive_body;
  std::vector<Atom> negative_body;

  friend bool operator==(const ProgramRule& a, const ProgramRule& b) {
    return a.head == b.head && a.positive_body == b.positive_body &&
           a.negative_body == b.negative_body;
  }
};

class LogicProgram {
 public:
  LogicProgram() = default;
  explicit LogicProgram(std::vector<ProgramRule> rules);
  LogicProgram(Alphabet alphabet, std::vector<ProgramRule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<ProgramRule>& rules() const { return rules_; }

  friend bool operator==(const LogicProgram& a, const LogicProgram& b) {
    return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_;
  }
  friend bool operator!=(const LogicProgram& a, const LogicProgram& b) {
    return !(a == b);
  }

 private:
  Alphabet alphabet_;
  std::vector<ProgramRule> rules_;
};

// Negation-free program: rules whose negative body intersects m are
// dropped, the remaining negative bodies are stripped.
LogicProgram reduct(const LogicProgram& p, const Interpretation& m);

// Least fixpoint of the immediate-consequence step. The program must be
// negation-free (contract error otherwise).
Interpretation least_model(const LogicProgram& p);

// m equals the least model of the reduct of p by m.
bool is_stable(const Interpretation& m, const LogicProgram& p);

// All stable models, ascending mask order. Candidates are restricted by
// the choice-pair pattern (x :- not y. / y :- not x. with x, y heading no
// other rule): every stable model holds exactly one atom of such a pair.
// Atoms outside pairs are enumerated fully.
std::vector<Interpretation> stable_models(const LogicProgram& p, const Limits& limits = {});

// Every stable model satisfies q; vacuously true when there is none.
bool sm_entails(const LogicProgram& p, const Formula& q, const Limits& limits = {});

std::size_t size(const ProgramRule& r);
std::size_t size(const LogicProgram& p);

}  // namespace pkr
