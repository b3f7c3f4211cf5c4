#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pkr/circuit.hpp"
#include "pkr/circumscription.hpp"
#include "pkr/default_logic.hpp"
#include "pkr/gcwa.hpp"
#include "pkr/logic_program.hpp"
#include "pkr/revision.hpp"

namespace pkr {

// A knowledge base together with the semantics it is to be read under.
// Every tag has both a model relation and the matching consequence
// relation (each pair is linked by "KB entails phi iff every model of KB
// satisfies phi").
struct PlKb {
  KnowledgeBase kb;
};
struct SbrKb {
  RevisionInstance instance;
};
struct WidtioKb {
  RevisionInstance instance;
};

using TaggedKb = std::variant<PlKb, CircKb, GcwaKb, DefaultTheory, LogicProgram, SbrKb, WidtioKb>;

// Short tag name: pl, circ, gcwa, default, sm, sbr, widtio.
std::string tag_name(const TaggedKb& kb);
const Alphabet& alphabet_of(const TaggedKb& kb);
std::size_t size_of(const TaggedKb& kb);

bool model_holds(const TaggedKb& kb, const Interpretation& m, const Limits& limits = {});
bool infer(const TaggedKb& kb, const Formula& phi, const Limits& limits = {});

struct Counterexample {
  std::string item;  // printed interpretation or formula
  bool left = false;
  bool right = false;
};

struct PreservationReport {
  bool pass = false;
  std::uint64_t universe_size = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Counterexample> counterexamples;  // first few mismatches

  static constexpr std::size_t kMaxCounterexamples = 10;
};

// Checks, for every interpretation M over kb1's alphabet, that
// M holds under kb1 exactly when circuit(M) holds under kb2. The circuit's
// inputs must be kb1's alphabet.
PreservationReport check_model_preservation(const TaggedKb& kb1, const TaggedKb& kb2,
                                            const BooleanCircuit& circuit,
                                            const Limits& limits = {});

struct QueryPolicy {
  int max_clause_len = 2;
  int random_formulas = 50;
  std::uint64_t seed = 20260809;
};

// The theorem-mode query universe: all non-tautological clauses up to the
// given length over the alphabet, then seeded random formulas, every item
// capped at size_bound.
std::vector<Formula> query_universe(const Alphabet& a, std::size_t size_bound,
                                    const QueryPolicy& policy);

// Checks, for each query phi in the universe over kb1's alphabet and with
// size at most kb1's, that kb1 infers phi exactly when kb2 infers the
// translated query. The circuit must be the identity or a pure atom
// substitution (every output wired straight to a distinct input).
PreservationReport check_theorem_preservation(const TaggedKb& kb1, const TaggedKb& kb2,
                                              const BooleanCircuit& circuit,
                                              const QueryPolicy& policy = {},
                                              const Limits& limits = {});

}  // namespace pkr
