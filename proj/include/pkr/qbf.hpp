#pragma once

#include <vector>

#include "pkr/clause.hpp"

namespace pkr {

// Exists-forall instance with an arbitrary clause matrix: the question is
// whether some assignment of the existential variables falsifies the
// matrix under every assignment of the universal ones.
class QbfInstance {
 public:
  QbfInstance() = default;
  QbfInstance(std::vector<Atom> existential, std::vector<Atom> universal,
              std::vector<Clause> clauses);

  const std::vector<Atom>& existential() const { return existential_; }
  const std::vector<Atom>& universal() const { return universal_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  Alphabet variables() const;  // existential then universal

  friend bool operator==(const QbfInstance& a, const QbfInstance& b) {
    return a.existential_ == b.existential_ && a.universal_ == b.universal_ &&
           a.clauses_ == b.clauses_;
  }
  friend bool operator!=(const QbfInstance& a, const QbfInstance& b) {
    return !(a == b);
  }

 private:
  std::vector<Atom> existential_, universal_;
  std::vector<Clause> clauses_;
};

// An instance whose matrix clauses each mention exactly three distinct
// variables and carry no repeated atom; the shape the reductions consume.
class QbfEA {
 public:
  // Throws contract_error when a clause mentions fewer than three
  // distinct variables (pad first) or repeats an atom.
  static QbfEA from(QbfInstance inst);

  const QbfInstance& instance() const { return inst_; }
  const std::vector<Atom>& existential() const { return inst_.existential(); }
  const std::vector<Atom>& universal() const { return inst_.universal(); }
  const std::vector<Clause>& matrix() const { return inst_.clauses(); }
  Alphabet variables() const { return inst_.variables(); }

 private:
  explicit QbfEA(QbfInstance inst) : inst_(std::move(inst)) {}
  QbfInstance inst_;
};

// Rewrites clauses shorter than three literals by disjoining a fresh
// universal variable both ways (one fresh variable per round, shared by
// all short clauses); tautological clauses are dropped. Validity is
// preserved; the result converts cleanly via QbfEA::from.
QbfInstance pad_to_three(const QbfInstance& inst);

}  // namespace pkr
