#include "pkr/gcwa.hpp"

#include "pkr/errors.hpp"

namespace pkr {

namespace {

std::uint32_t free_atom_bits(const GcwaKb& kb, const Limits& limits) {
  const Alphabet& a = kb.alphabet();
  const int n = a.size();
  if (n > limits.gcwa_atoms)
    throw capacity_error("alphabet of " + std::to_string(n) +
                         " atoms exceeds the positive-clause enumeration cap of " +
                         std::to_string(limits.gcwa_atoms));
  const std::vector<std::uint32_t> models = all_model_masks(kb.theory, a, limits);

  // A positive clause is a bit set of atoms; it is entailed iff every
  // model meets it. gamma = 0 is the empty clause, entailed only by an
  // inconsistent theory.
  const auto entailed = [&](std::uint32_t gamma) {
    for (std::uint32_t m : models)
      if ((m & gamma) == 0) return false;
    return true;
  };

  std::uint32_t free_bits = 0;
  const std::uint64_t clause_count = std::uint64_t(1) << n;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t(1) << i;
    bool free = true;
    for (std::uint64_t g = 0; g < clause_count && free; ++g) {
      const auto gamma = static_cast<std::uint32_t>(g);
      if (!entailed(gamma) && entailed(gamma | bit)) free = false;
    }
    if (free) free_bits |= bit;
  }
  return free_bits;
}

}  // namespace

std::vector<Atom> gcwa_free_atoms(const GcwaKb& kb, const Limits& limits) {
  const std::uint32_t bits = free_atom_bits(kb, limits);
  std::vector<Atom> out;
  for (int i = 0; i < kb.alphabet().size(); ++i)
    if ((bits >> i) & 1u) out.push_back(kb.alphabet().at(i));
  return out;
}

std::vector<Interpretation> gcwa_models(const GcwaKb& kb, const Limits& limits) {
  const std::uint32_t free_bits = free_atom_bits(kb, limits);
  std::vector<Interpretation> out;
  for (std::uint32_t m : all_model_masks(kb.theory, kb.alphabet(), limits))
    if ((m & free_bits) == 0) out.push_back(Interpretation::of_mask(kb.alphabet(), m));
  return out;
}

bool gcwa_model_check(const Interpretation& m, const GcwaKb& kb, const Limits& limits) {
  const Interpretation over =
      m.alphabet() == kb.alphabet() ? m : m.reinterpret(kb.alphabet());
  for (const Formula& f : kb.theory.formulas())
    if (!eval(f, over)) return false;
  return (over.mask() & free_atom_bits(kb, limits)) == 0;
}

bool gcwa_entails(const GcwaKb& kb, const Formula& phi, const Limits& limits) {
  for (const Atom& v : vars(phi))
    if (!kb.alphabet().contains(v))
      throw contract_error("query mentions atom '" + v.name() +
                           "' outside the theory's alphabet");
  const std::uint32_t free_bits = free_atom_bits(kb, limits);
  const CompiledFormula q(phi, kb.alphabet());
  for (std::uint32_t m : all_model_masks(kb.theory, kb.alphabet(), limits))
    if ((m & free_bits) == 0 && !q.eval_mask(m)) return false;
  return true;
}

KnowledgeBase gcwa_rewrite(const GcwaKb& kb, const Limits& limits) {
  KnowledgeBase out = kb.theory;
  for (const Atom& a : gcwa_free_atoms(kb, limits))
    out = out.with_formula(Formula::Not(Formula::Var(a)));
  return out;
}

}  // namespace pkr
