#pragma once

#include <vector>

#include "pkr/semantics.hpp"

namespace pkr {

// pre : just1, just2, ... / cons. The prerequisite defaults to true and
// the justification list may be empty.
struct DefaultRule {
  Formula prerequisite = Formula::True();
  std::vector<Formula> justifications;
  Formula consequent;

  friend bool operator==(const DefaultRule& a, const DefaultRule& b) {
    return a.prerequisite == b.prerequisite && a.justifications == b.justifications &&
           a.consequent == b.consequent;
  }
};

class DefaultTheory {
 public:
  DefaultTheory() = default;
  DefaultTheory(KnowledgeBase background, std::vector<DefaultRule> defaults);

  const KnowledgeBase& background() const { return background_; }
  const std::vector<DefaultRule>& defaults() const { return defaults_; }
  const Alphabet& alphabet() const { return background_.alphabet(); }

  friend bool operator==(const DefaultTheory& a, const DefaultTheory& b) {
    return a.background_ == b.background_ && a.defaults_ == b.defaults_;
  }
  friend bool operator!=(const DefaultTheory& a, const DefaultTheory& b) {
    return !(a == b);
  }

 private:
  KnowledgeBase background_;  // W, alphabet covers all rule components
  std::vector<DefaultRule> defaults_;
};

struct Extension {
  std::vector<int> generating;  // indices into the theory's default list
  KnowledgeBase base;           // W plus the generating consequents
};

// Fixpoint test for a candidate set gd of generating defaults (given as
// sorted indices). With E = Cn(W + consequents of gd), checks that
//   (a) gd is exactly the set of defaults whose prerequisite E entails
//       and whose justifications are each consistent with E, and
//   (b) gd can be ordered so every prerequisite follows from W plus the
//       consequents of the earlier rules.
bool reiter_check(const DefaultTheory& dt, const std::vector<int>& gd,
                  const Limits& limits = {});

// All extensions, ordered by their generating set (as a bitmask over the
// default list, ascending). Branch-and-prune search: mutually exclusive
// normal pairs (:g/g with :~g/~g) contribute one branch per side instead
// of four, and a branch dies as soon as its partial base refutes a chosen
// justification.
std::vector<Extension> extensions(const DefaultTheory& dt, const Limits& limits = {});

// Some extension's base entails q; false when there is no extension.
bool credulous_entails(const DefaultTheory& dt, const Formula& q, const Limits& limits = {});

// Every extension's base entails q; vacuously true without extensions.
bool skeptical_entails(const DefaultTheory& dt, const Formula& q, const Limits& limits = {});

bool model_of_some_extension(const Interpretation& m, const DefaultTheory& dt,
                             const Limits& limits = {});

std::size_t size(const DefaultRule& r);
std::size_t size(const DefaultTheory& dt);

}  // namespace pkr
