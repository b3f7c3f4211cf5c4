#pragma once

#include <vector>

#include "pkr/semantics.hpp"

namespace pkr {

// Closed-world reading of a theory: atoms that are "free for negation"
// get negated on top of the theory.
struct GcwaKb {
  KnowledgeBase theory;

  const Alphabet& alphabet() const { return theory.alphabet(); }
};

// Atoms a such that for every positive clause gamma (the empty clause
// included), if the theory does not entail gamma then it does not entail
// gamma v a either. For a consistent theory these are exactly the atoms
// false in every minimal model; for an inconsistent theory every atom
// qualifies vacuously. Enumerates all 2^n positive clauses, so it carries
// its own cap (limits.gcwa_atoms).
std::vector<Atom> gcwa_free_atoms(const GcwaKb& kb, const Limits& limits = {});

// Models of theory + {~a | a free}, ascending mask order.
std::vector<Interpretation> gcwa_models(const GcwaKb& kb, const Limits& limits = {});

bool gcwa_model_check(const Interpretation& m, const GcwaKb& kb, const Limits& limits = {});

// Every GCWA model satisfies phi; vars(phi) must lie inside the theory's
// alphabet (fresh atoms would change the free set).
bool gcwa_entails(const GcwaKb& kb, const Formula& phi, const Limits& limits = {});

// The theory extended with one negated literal per free atom; a plain
// knowledge base with exactly the GCWA models.
KnowledgeBase gcwa_rewrite(const GcwaKb& kb, const Limits& limits = {});

}  // namespace pkr
