#include "pkr/qbf.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

QbfInstance::QbfInstance(std::vector<Atom> existential, std::vector<Atom> universal,
                         std::vector<Clause> clauses)
    : existential_(std::move(existential)),
      universal_(std::move(universal)),
      clauses_(std::move(clauses)) {
  const Alphabet all = variables();  // rejects X/Y overlaps and duplicates
  for (const Clause& c : clauses_) {
    if (c.length() == 0) throw contract_error("empty clause in QBF matrix");
    for (const Literal& l : c.literals())
      if (!all.contains(l.atom))
        throw contract_error("clause mentions undeclared variable '" + l.atom.name() + "'");
  }
}

Alphabet QbfInstance::variables() const {
  std::vector<Atom> atoms = existential_;
  atoms.insert(atoms.end(), universal_.begin(), universal_.end());
  return Alphabet(std::move(atoms));
}

QbfEA QbfEA::from(QbfInstance inst) {
  for (const Clause& c : inst.clauses()) {
    if (c.is_tautology())
      throw contract_error("matrix clause '" + to_string(c) + "' is tautological");
    if (c.atoms().size() != 3)
      throw contract_error("matrix clause '" + to_string(c) +
                           "' does not mention exactly three distinct variables");
  }
  return QbfEA(std::move(inst));
}

QbfInstance pad_to_three(const QbfInstance& inst) {
  std::vector<Atom> universal = inst.universal();
  std::vector<Clause> clauses;
  for (const Clause& c : inst.clauses())
    if (!c.is_tautology()) clauses.push_back(c);

  const auto taken = [&](const std::string& name) {
    const Atom a(name);
    return std::find(inst.existential().begin(), inst.existential().end(), a) !=
               inst.existential().end() ||
           std::find(universal.begin(), universal.end(), a) != universal.end();
  };

  int fresh_counter = 0;
  for (;;) {
    bool any_short = false;
    for (const Clause& c : clauses)
      if (c.atoms().size() < 3) { any_short = true; break; }
    if (!any_short) break;

    std::string name;
    do {
      name = "pad" + std::to_string(++fresh_counter);
    } while (taken(name));
    const Atom fresh(name);
    universal.push_back(fresh);

    std::vector<Clause> next;
    for (const Clause& c : clauses) {
      if (c.atoms().size() >= 3) {
        next.push_back(c);
        continue;
      }
      std::vector<Literal> pos = c.literals();
      pos.push_back({fresh, true});
      std::vector<Literal> neg = c.literals();
      neg.push_back({fresh, false});
      next.emplace_back(std::move(pos));
      next.emplace_back(std::move(neg));
    }
    clauses = std::move(next);
  }
  return QbfInstance(inst.existential(), std::move(universal), std::move(clauses));
}

}  // namespace pkr
