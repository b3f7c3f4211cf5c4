#pragma once

#include <cstdint>
#include <vector>

#include "pkr/formula.hpp"
#include "pkr/interpretation.hpp"

namespace pkr {

// Enumeration bounds. Everything here is exact and explicit, so every
// operation that walks an exponential space carries a hard cap.
struct Limits {
  int model_atoms = 24;        // 2^n interpretation enumeration
  int gcwa_atoms = 16;         // positive-clause enumeration
  int default_rules = 24;      // extension search
  int program_atoms = 22;      // stable-model candidate enumeration
  int kernel_vertices = 20;    // kernel subset enumeration
  int qbf_vars = 20;           // QBF assignment enumeration
  int revision_formulas = 16;  // maximal-consistent-subset enumeration
};

// Standard truth-functional evaluation. Throws eval_error naming the
// atom when the formula mentions one outside m's alphabet.
bool eval(const Formula& f, const Interpretation& m);

// Formula flattened to postfix over alphabet positions; evaluating a
// candidate mask is then a tight loop with no name lookups.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Alphabet& a);
  bool eval_mask(std::uint32_t mask) const;

 private:
  struct Op {
    Formula::Kind kind;
    int var_bit = 0;
    bool value = false;
  };
  std::vector<Op> ops_;
  mutable std::vector<bool> stack_;
};

// The set of interpretations over an n-atom alphabet that satisfy a
// formula set, as a 2^n-bit set indexed by interpretation mask.
class ModelSet {
 public:
  static ModelSet none(int n_atoms);
  static ModelSet all(int n_atoms);
  static ModelSet of(const Formula& f, const Alphabet& a);

  int n_atoms() const { return n_atoms_; }
  bool test(std::uint32_t mask) const;
  void set(std::uint32_t mask);

  ModelSet& operator&=(const ModelSet& o);
  bool subset_of(const ModelSet& o) const;
  bool intersects(const ModelSet& o) const;
  bool empty() const;
  std::uint64_t count() const;

 private:
  explicit ModelSet(int n_atoms);
  int n_atoms_;
  std::vector<std::uint64_t> words_;
};

// Satisfying masks of all formulas jointly, ascending. Requires
// vars(kb) within a; capacity error beyond limits.model_atoms.
std::vector<std::uint32_t> all_model_masks(const KnowledgeBase& kb, const Alphabet& a,
                                           const Limits& limits = {});

std::vector<Interpretation> all_models(const KnowledgeBase& kb, const Alphabet& a,
                                       const Limits& limits = {});

// Classical consequence: every model of kb satisfies phi. Atoms of phi
// outside kb's alphabet extend the evaluation alphabet (they are
// unconstrained, which leaves classical entailment unchanged).
bool entails(const KnowledgeBase& kb, const Formula& phi, const Limits& limits = {});

bool is_consistent(const KnowledgeBase& kb, const Limits& limits = {});

// Models with a subset-minimal set of true atoms, ascending mask order.
std::vector<Interpretation> minimal_models(const KnowledgeBase& kb, const Alphabet& a,
                                           const Limits& limits = {});
std::vector<std::uint32_t> minimal_model_masks(const KnowledgeBase& kb, const Alphabet& a,
                                               const Limits& limits = {});

// Conjunction of literals satisfied by exactly m among interpretations
// over a; m must be an interpretation over a.
Formula conjunction_of_literals(const Interpretation& m, const Alphabet& a);

}  // namespace pkr
