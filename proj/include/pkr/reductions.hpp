#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pkr/circuit.hpp"
#include "pkr/circumscription.hpp"
#include "pkr/clause.hpp"
#include "pkr/default_logic.hpp"
#include "pkr/graph.hpp"
#include "pkr/logic_program.hpp"
#include "pkr/qbf.hpp"
#include "pkr/revision.hpp"

namespace pkr {

// All non-tautological clauses over exactly three distinct variables of
// the alphabet: 8 * C(n, 3) clauses, ordered by variable triple
// (lexicographic in alphabet positions) and then by sign pattern, the
// all-negative pattern first. Requires at least three variables.
std::vector<Clause> clause_universe(const Alphabet& vars);

// The fixed program whose stable models encode edge sets of digraphs on n
// vertices: atoms a1..an, rij, sij and, for every vertex pair (i, j),
//   aj :- rij, not ai.   sij :- not rij.   rij :- not sij.
// 2n^2 + n atoms and 3n^2 rules. Vertex indices are single digits (n <= 9).
LogicProgram kernel_program(int n);

// (all ~rij for edges (i,j)) v (all rij for non-edges): the query that the
// kernel program fails to entail exactly when g has a kernel.
Formula kernel_query(const DirectedGraph& g);

struct EtheringtonResult {
  CircKb target;
  BooleanCircuit model_map;
};

// Etherington's translation of a prerequisite-free normal default theory
// (every rule :g/g) into circumscription: one fresh minimized atom per
// default, defined as the negation of its formula, with the theory's own
// letters varying. The circuit extends a model with the fresh atoms it
// makes true. Fresh atoms are a1, a2, ... in rule order; a clash with the
// theory's letters is an input error.
EtheringtonResult etherington(const DefaultTheory& dt);

// The default theory whose skeptical consequences are the circumscriptive
// consequences of t with every letter minimized: W = t plus one default
// :~x/~x per alphabet atom.
DefaultTheory circ_to_default(const KnowledgeBase& t);

struct QbfSkepticalMcResult {
  DefaultTheory theory;
  Interpretation model;
};

// The QBF is valid exactly when the model (the c-atoms of the matrix
// clauses) satisfies some extension of the theory. Fresh atoms c1..ck
// follow the clause-universe order; w is reserved.
QbfSkepticalMcResult qbf_to_skeptical_mc(const QbfEA& q);

struct QbfCredulousInfResult {
  DefaultTheory theory;
  Formula query;
};

// The QBF is valid exactly when some extension of the theory derives the
// query (the matrix's c-pattern conjoined with w).
QbfCredulousInfResult qbf_to_credulous_inf(const QbfEA& q);

// Flattens the revision to plain propositional logic; alias of
// widtio_base, with the target never larger than K plus A.
KnowledgeBase widtio_to_pl(const RevisionInstance& r, const Limits& limits = {});

struct SweepRow {
  long long param = 0;
  std::vector<std::pair<std::string, long long>> columns;
};

// Runs the named generator over param = from..to and reports sizes.
// Names: kernel, clause-universe, qbf-skeptical-mc, qbf-credulous-inf
// (the QBF sweeps use an empty matrix over n variables, half existential).
std::vector<SweepRow> reduction_size_report(const std::string& name, int from, int to);

}  // namespace pkr
