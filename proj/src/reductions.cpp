#include "pkr/reductions.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

std::vector<Clause> clause_universe(const Alphabet& vars) {
  const int n = vars.size();
  if (n < 3) throw contract_error("clause universe needs at least three variables");
  std::vector<Clause> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int signs = 0; signs < 8; ++signs)
          out.push_back(Clause({{vars.at(i), (signs & 1) != 0},
                                {vars.at(j), (signs & 2) != 0},
                                {vars.at(k), (signs & 4) != 0}}));
  return out;
}

namespace {

Atom indexed_atom(const char* prefix, int i) { return Atom(prefix + std::to_string(i)); }

Atom pair_atom(const char* prefix, int i, int j) {
  return Atom(prefix + std::to_string(i) + std::to_string(j));
}

}  // namespace

LogicProgram kernel_program(int n) {
  if (n < 1) throw contract_error("kernel program needs at least one vertex");
  if (n > 9) throw contract_error("kernel program vertex indices are single digits");
  std::vector<ProgramRule> rules;
  rules.reserve(3 * n * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Atom r = pair_atom("r", i, j), s = pair_atom("s", i, j);
      rules.emplace_back(indexed_atom("a", j), std::vector<Atom>{r},
                         std::vector<Atom>{indexed_atom("a", i)});
      rules.emplace_back(s, std::vector<Atom>{}, std::vector<Atom>{r});
      rules.emplace_back(r, std::vector<Atom>{}, std::vector<Atom>{s});
    }
  }
  return LogicProgram(std::move(rules));
}

Formula kernel_query(const DirectedGraph& g) {
  std::vector<Formula> lits;
  for (const auto& [i, j] : g.edges())
    lits.push_back(Formula::Not(Formula::Var(pair_atom("r", i, j))));
  for (int i = 1; i <= g.vertex_count(); ++i)
    for (int j = 1; j <= g.vertex_count(); ++j)
      if (!g.has_edge(i, j)) lits.push_back(Formula::Var(pair_atom("r", i, j)));
  return disjunction_of(lits);
}

EtheringtonResult etherington(const DefaultTheory& dt) {
  const auto& rules = dt.defaults();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const DefaultRule& d = rules[i];
    const bool pfn = d.prerequisite == Formula::True() && d.justifications.size() == 1 &&
                     d.justifications[0] == d.consequent;
    if (!pfn)
      throw contract_error("default #" + std::to_string(i + 1) +
                           " is not prerequisite-free normal (:g/g)");
  }
  const Alphabet letters = dt.alphabet();

  std::vector<Atom> fresh;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    Atom a = indexed_atom("a", static_cast<int>(i + 1));
    if (letters.contains(a))
      throw contract_error("fresh atom '" + a.name() + "' collides with a theory letter");
    fresh.push_back(std::move(a));
  }

  std::vector<Formula> theory = dt.background().formulas();
  for (std::size_t i = 0; i < rules.size(); ++i)
    theory.push_back(
        Formula::Iff(Formula::Var(fresh[i]), negated(rules[i].consequent)));

  std::vector<Atom> target_atoms = letters.atoms();
  target_atoms.insert(target_atoms.end(), fresh.begin(), fresh.end());
  CircKb target(KnowledgeBase(Alphabet(target_atoms), std::move(theory)), fresh, {},
                letters.atoms());

  BooleanCircuit circuit;
  circuit.inputs = letters;
  for (int i = 0; i < letters.size(); ++i)
    circuit.outputs.emplace_back(letters.at(i), BooleanCircuit::Ref{true, i});
  for (std::size_t i = 0; i < rules.size(); ++i)
    circuit.outputs.emplace_back(fresh[i],
                                 compile_formula(circuit, negated(rules[i].consequent)));
  return {std::move(target), std::move(circuit)};
}

DefaultTheory circ_to_default(const KnowledgeBase& t) {
  std::vector<DefaultRule> defaults;
  for (const Atom& x : t.alphabet().atoms()) {
    const Formula nx = Formula::Not(Formula::Var(x));
    defaults.push_back({Formula::True(), {nx}, nx});
  }
  return DefaultTheory(t, std::move(defaults));
}

namespace {

struct QbfParts {
  Alphabet theory_alphabet;  // c1..ck, X u Y, w
  std::vector<Atom> c_atoms;
  std::vector<Clause> universe;
  Atom w{"w"};
};

QbfParts qbf_parts(const QbfEA& q) {
  QbfParts parts;
  const Alphabet vars = q.variables();
  parts.universe = clause_universe(vars);

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < parts.universe.size(); ++i) {
    Atom c = indexed_atom("c", static_cast<int>(i + 1));
    if (vars.contains(c))
      throw contract_error("fresh atom '" + c.name() + "' collides with a QBF variable");
    parts.c_atoms.push_back(c);
    atoms.push_back(std::move(c));
  }
  if (vars.contains(parts.w))
    throw contract_error("atom 'w' is reserved and collides with a QBF variable");
  atoms.insert(atoms.end(), vars.atoms().begin(), vars.atoms().end());
  atoms.push_back(parts.w);
  parts.theory_alphabet = Alphabet(std::move(atoms));
  return parts;
}

Formula clause_implications(const QbfParts& parts) {
  std::vector<Formula> imps;
  imps.reserve(parts.universe.size());
  for (std::size_t i = 0; i < parts.universe.size(); ++i)
    imps.push_back(Formula::Implies(Formula::Var(parts.c_atoms[i]),
                                    parts.universe[i].to_formula()));
  return conjunction_of(imps);
}

int universe_index(const QbfParts& parts, const Clause& c) {
  const auto it = std::find(parts.universe.begin(), parts.universe.end(), c);
  if (it == parts.universe.end())
    throw contract_error("matrix clause '" + to_string(c) +
                         "' is not a member of the clause universe");
  return static_cast<int>(it - parts.universe.begin());
}

}  // namespace

QbfSkepticalMcResult qbf_to_skeptical_mc(const QbfEA& q) {
  const QbfParts parts = qbf_parts(q);
  const Formula w = Formula::Var(parts.w);

  std::vector<DefaultRule> defaults;
  for (const Atom& c : parts.c_atoms) {
    const Formula cv = Formula::Var(c);
    defaults.push_back({Formula::True(), {cv}, cv});
    defaults.push_back({Formula::True(), {Formula::Not(cv)}, Formula::Not(cv)});
  }
  for (const Atom& x : q.existential()) {
    for (const bool positive : {true, false}) {
      Formula xv = Formula::Var(x);
      if (!positive) xv = Formula::Not(xv);
      const Formula impl = Formula::Implies(w, xv);
      defaults.push_back({Formula::True(), {Formula::And(w, impl)}, impl});
    }
  }
  defaults.push_back({Formula::True(), {Formula::And(w, clause_implications(parts))}, w});

  DefaultTheory theory(KnowledgeBase(parts.theory_alphabet, {}), std::move(defaults));

  std::uint32_t mask = 0;
  for (const Clause& c : q.matrix()) {
    const int idx = universe_index(parts, c);
    mask |= std::uint32_t(1)
            << parts.theory_alphabet.index(parts.c_atoms[idx]);
  }
  Interpretation model = Interpretation::of_mask(theory.alphabet(), mask);
  return {std::move(theory), std::move(model)};
}

QbfCredulousInfResult qbf_to_credulous_inf(const QbfEA& q) {
  const QbfParts parts = qbf_parts(q);
  const Formula w = Formula::Var(parts.w);

  std::vector<DefaultRule> defaults;
  for (const Atom& c : parts.c_atoms) {
    const Formula cv = Formula::Var(c);
    defaults.push_back({Formula::True(), {cv}, cv});
    defaults.push_back({Formula::True(), {Formula::Not(cv)}, Formula::Not(cv)});
  }
  for (const Atom& x : q.existential()) {
    const Formula xv = Formula::Var(x);
    defaults.push_back({Formula::True(), {xv}, xv});
    defaults.push_back({Formula::True(), {Formula::Not(xv)}, Formula::Not(xv)});
  }
  defaults.push_back({Formula::Not(clause_implications(parts)), {}, w});

  DefaultTheory theory(KnowledgeBase(parts.theory_alphabet, {}), std::move(defaults));

  std::vector<bool> in_matrix(parts.universe.size(), false);
  for (const Clause& c : q.matrix()) in_matrix[universe_index(parts, c)] = true;
  std::vector<Formula> lits;
  for (std::size_t i = 0; i < parts.universe.size(); ++i) {
    const Formula cv = Formula::Var(parts.c_atoms[i]);
    lits.push_back(in_matrix[i] ? cv : Formula::Not(cv));
  }
  lits.push_back(w);
  return {std::move(theory), conjunction_of(lits)};
}

KnowledgeBase widtio_to_pl(const RevisionInstance& r, const Limits& limits) {
  return widtio_base(r, limits);
}

std::vector<SweepRow> reduction_size_report(const std::string& name, int from, int to) {
  if (from < 1 || to < from) throw contract_error("empty or invalid sweep range");
  std::vector<SweepRow> rows;
  for (int n = from; n <= to; ++n) {
    SweepRow row;
    row.param = n;
    if (name == "kernel") {
      const LogicProgram p = kernel_program(n);
      row.columns = {{"atoms", p.alphabet().size()},
                     {"rules", static_cast<long long>(p.rules().size())},
                     {"size", static_cast<long long>(size(p))}};
    } else if (name == "clause-universe") {
      std::vector<Atom> vars;
      for (int i = 1; i <= n; ++i) vars.push_back(indexed_atom("v", i));
      row.columns = {{"clauses",
                      static_cast<long long>(clause_universe(Alphabet(vars)).size())}};
    } else if (name == "qbf-skeptical-mc" || name == "qbf-credulous-inf") {
      std::vector<Atom> x, y;
      for (int i = 1; i <= n / 2; ++i) x.push_back(indexed_atom("x", i));
      for (int i = n / 2 + 1; i <= n; ++i) y.push_back(indexed_atom("y", i));
      const QbfEA q = QbfEA::from(QbfInstance(x, y, {}));
      const DefaultTheory theory = name == "qbf-skeptical-mc"
                                       ? qbf_to_skeptical_mc(q).theory
                                       : qbf_to_credulous_inf(q).theory;
      row.columns = {{"defaults", static_cast<long long>(theory.defaults().size())},
                     {"atoms", theory.alphabet().size()},
                     {"size", static_cast<long long>(size(theory))}};
    } else {
      throw contract_error("unknown sweep name '" + name + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pkr
