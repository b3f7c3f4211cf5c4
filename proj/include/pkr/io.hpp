#pragma once

#include <string>

#include "pkr/circuit.hpp"
#include "pkr/circumscription.hpp"
#include "pkr/default_logic.hpp"
#include "pkr/graph.hpp"
#include "pkr/logic_program.hpp"
#include "pkr/qbf.hpp"
#include "pkr/revision.hpp"

namespace pkr {

// Text formats, one object per file. Every emitter's output re-parses to
// an equal value. KB-style files use `#` comments, programs use `%`.

// `atoms: p q r` header (optional), then one formula per line.
KnowledgeBase parse_kb_text(const std::string& text);
std::string emit_kb_text(const KnowledgeBase& kb);

// KB file plus `minimize:` / `fixed:` / `vary:` header lines.
CircKb parse_circ_text(const std::string& text);
std::string emit_circ_text(const CircKb& c);

// `W:` section of formulas, `D:` section of `pre : j1 , j2 / cons` rules
// (empty prerequisite means true, the justification list may be empty).
DefaultTheory parse_default_text(const std::string& text);
std::string emit_default_text(const DefaultTheory& dt);

// `head :- b1, b2, not c1.` rules and `head.` facts.
LogicProgram parse_program_text(const std::string& text);
std::string emit_program_text(const LogicProgram& p);

// `K:` section of formulas, `A:` single formula.
RevisionInstance parse_revision_text(const std::string& text);
std::string emit_revision_text(const RevisionInstance& r);

// `exists:` / `forall:` headers, then clause lines of space-separated
// literals with a `-` prefix for negation.
QbfInstance parse_qbf_text(const std::string& text);
std::string emit_qbf_text(const QbfInstance& q);

// Vertex count on the first line, then `i j` edge lines.
DirectedGraph parse_graph_text(const std::string& text);
std::string emit_graph_text(const DirectedGraph& g);

// `inputs:` line, `g1 = NOT in(p)` gate lines (AND/OR/NOT/CONST; CONST
// takes true or false), `outputs: a=g1 p=in(p)` line.
BooleanCircuit parse_circuit_text(const std::string& text);
std::string emit_circuit_text(const BooleanCircuit& c);

// `atoms:` line and a `true:` line listing the true atoms.
Interpretation parse_interpretation_text(const std::string& text);
std::string emit_interpretation_text(const Interpretation& m);

// A single formula, comments and blank lines allowed.
Formula parse_query_text(const std::string& text);

}  // namespace pkr
