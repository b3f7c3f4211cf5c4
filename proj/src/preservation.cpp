#include "pkr/preservation.hpp"

#include <random>

#include "pkr/errors.hpp"

namespace pkr {

std::string tag_name(const TaggedKb& kb) {
  struct Visitor {
    std::string operator()(const PlKb&) { return "pl"; }
    std::string operator()(const CircKb&) { return "circ"; }
    std::string operator()(const GcwaKb&) { return "gcwa"; }
    std::string operator()(const DefaultTheory&) { return "default"; }
    std::string operator()(const LogicProgram&) { return "sm"; }
    std::string operator()(const SbrKb&) { return "sbr"; }
    std::string operator()(const WidtioKb&) { return "widtio"; }
  };
  return std::visit(Visitor{}, kb);
}

const Alphabet& alphabet_of(const TaggedKb& kb) {
  struct Visitor {
    const Alphabet& operator()(const PlKb& k) { return k.kb.alphabet(); }
    const Alphabet& operator()(const CircKb& k) { return k.alphabet(); }
    const Alphabet& operator()(const GcwaKb& k) { return k.alphabet(); }
    const Alphabet& operator()(const DefaultTheory& k) { return k.alphabet(); }
    const Alphabet& operator()(const LogicProgram& k) { return k.alphabet(); }
    const Alphabet& operator()(const SbrKb& k) { return k.instance.alphabet(); }
    const Alphabet& operator()(const WidtioKb& k) { return k.instance.alphabet(); }
  };
  return std::visit(Visitor{}, kb);
}

std::size_t size_of(const TaggedKb& kb) {
  struct Visitor {
    std::size_t operator()(const PlKb& k) { return size(k.kb); }
    std::size_t operator()(const CircKb& k) { return size(k); }
    std::size_t operator()(const GcwaKb& k) { return size(k.theory); }
    std::size_t operator()(const DefaultTheory& k) { return size(k); }
    std::size_t operator()(const LogicProgram& k) { return size(k); }
    std::size_t operator()(const SbrKb& k) { return size(k.instance); }
    std::size_t operator()(const WidtioKb& k) { return size(k.instance); }
  };
  return std::visit(Visitor{}, kb);
}

bool model_holds(const TaggedKb& kb, const Interpretation& m, const Limits& limits) {
  struct Visitor {
    const Interpretation& m;
    const Limits& limits;
    bool operator()(const PlKb& k) {
      const Interpretation over =
          m.alphabet() == k.kb.alphabet() ? m : m.reinterpret(k.kb.alphabet());
      for (const Formula& f : k.kb.formulas())
        if (!eval(f, over)) return false;
      return true;
    }
    bool operator()(const CircKb& k) { return circ_model_check(m, k, limits); }
    bool operator()(const GcwaKb& k) { return gcwa_model_check(m, k, limits); }
    bool operator()(const DefaultTheory& k) { return model_of_some_extension(m, k, limits); }
    bool operator()(const LogicProgram& k) {
      const Interpretation over =
          m.alphabet() == k.alphabet() ? m : m.reinterpret(k.alphabet());
      return is_stable(over, k);
    }
    bool operator()(const SbrKb& k) { return sbr_model_check(m, k.instance, limits); }
    bool operator()(const WidtioKb& k) { return widtio_model_check(m, k.instance, limits); }
  };
  return std::visit(Visitor{m, limits}, kb);
}

bool infer(const TaggedKb& kb, const Formula& phi, const Limits& limits) {
  struct Visitor {
    const Formula& phi;
    const Limits& limits;
    bool operator()(const PlKb& k) { return entails(k.kb, phi, limits); }
    bool operator()(const CircKb& k) { return circ_entails(k, phi, limits); }
    bool operator()(const GcwaKb& k) { return gcwa_entails(k, phi, limits); }
    bool operator()(const DefaultTheory& k) { return skeptical_entails(k, phi, limits); }
    bool operator()(const LogicProgram& k) { return sm_entails(k, phi, limits); }
    bool operator()(const SbrKb& k) { return sbr_entails(k.instance, phi, limits); }
    bool operator()(const WidtioKb& k) { return widtio_entails(k.instance, phi, limits); }
  };
  return std::visit(Visitor{phi, limits}, kb);
}

namespace {

void record(PreservationReport& report, std::string item, bool left, bool right) {
  ++report.mismatch_count;
  if (report.counterexamples.size() < PreservationReport::kMaxCounterexamples)
    report.counterexamples.push_back({std::move(item), left, right});
}

}  // namespace

PreservationReport check_model_preservation(const TaggedKb& kb1, const TaggedKb& kb2,
                                            const BooleanCircuit& circuit,
                                            const Limits& limits) {
  const Alphabet& a = alphabet_of(kb1);
  if (circuit.inputs != a)
    throw contract_error("circuit inputs do not match the source alphabet");
  validate(circuit);
  if (a.size() > limits.model_atoms)
    throw capacity_error("alphabet of " + std::to_string(a.size()) +
                         " atoms exceeds the model enumeration cap of " +
                         std::to_string(limits.model_atoms));
  PreservationReport report;
  const std::uint64_t count = std::uint64_t(1) << a.size();
  report.universe_size = count;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Interpretation m = Interpretation::of_mask(a, static_cast<std::uint32_t>(mask));
    const bool left = model_holds(kb1, m, limits);
    const bool right = model_holds(kb2, eval_circuit(circuit, m), limits);
    if (left != right) record(report, to_string(m), left, right);
  }
  report.pass = report.mismatch_count == 0;
  return report;
}

std::vector<Formula> query_universe(const Alphabet& a, std::size_t size_bound,
                                    const QueryPolicy& policy) {
  std::vector<Formula> out;

  // Clauses of length 1..L over distinct atoms, combination order then
  // sign pattern.
  std::vector<int> combo;
  const auto emit_combo = [&] {
    const int len = static_cast<int>(combo.size());
    for (int signs = 0; signs < (1 << len); ++signs) {
      std::vector<Literal> lits;
      for (int t = 0; t < len; ++t)
        lits.push_back({a.at(combo[t]), ((signs >> t) & 1) != 0});
      const Formula f = Clause(std::move(lits)).to_formula();
      if (size(f) <= size_bound) out.push_back(f);
    }
  };
  const auto walk = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      emit_combo();
      return;
    }
    for (int i = next; i + remaining <= a.size(); ++i) {
      combo.push_back(i);
      self(self, i + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (int len = 1; len <= policy.max_clause_len && len <= a.size(); ++len)
    walk(walk, 0, len);

  // Seeded random formulas. Raw modulo keeps draws identical across
  // platforms (std::uniform_int_distribution is not portable).
  if (a.size() > 0) {
    std::mt19937_64 rng(policy.seed);
    const auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
    const auto gen = [&](auto&& self, int depth) -> Formula {
      if (depth == 0 || pick(4) == 0) {
        if (pick(12) == 0) return Formula::Constant(pick(2) == 0);
        return Formula::Var(a.at(pick(a.size())));
      }
      switch (pick(5)) {
        case 0: return Formula::Not(self(self, depth - 1));
        case 1: return Formula::And(self(self, depth - 1), self(self, depth - 1));
        case 2: return Formula::Or(self(self, depth - 1), self(self, depth - 1));
        case 3: return Formula::Implies(self(self, depth - 1), self(self, depth - 1));
        default: return Formula::Iff(self(self, depth - 1), self(self, depth - 1));
      }
    };
    int accepted = 0;
    for (int attempts = 0; accepted < policy.random_formulas && attempts < policy.random_formulas * 400;
         ++attempts) {
      Formula f = gen(gen, 3);
      if (size(f) <= size_bound) {
        out.push_back(std::move(f));
        ++accepted;
      }
    }
  }
  return out;
}

PreservationReport check_theorem_preservation(const TaggedKb& kb1, const TaggedKb& kb2,
                                              const BooleanCircuit& circuit,
                                              const QueryPolicy& policy,
                                              const Limits& limits) {
  const Alphabet& a = alphabet_of(kb1);
  if (circuit.inputs != a)
    throw contract_error("circuit inputs do not match the source alphabet");
  validate(circuit);

  // Theorem mode transports queries through the circuit, which therefore
  // must be a pure renaming: every output wired directly to an input,
  // each input read exactly once.
  if (!circuit.gates.empty() || circuit.outputs.size() != static_cast<std::size_t>(a.size()))
    throw contract_error("non-substitution circuit used for theorem mode");
  std::vector<Atom> subst(a.size(), Atom("x"));
  std::vector<int> uses(a.size(), 0);
  bool identity = true;
  for (int i = 0; i < a.size(); ++i) {
    const auto& [atom, ref] = circuit.outputs[i];
    if (!ref.is_input) throw contract_error("non-substitution circuit used for theorem mode");
    ++uses[ref.index];
    subst[ref.index] = atom;
    if (!(atom == a.at(i) && ref.index == i)) identity = false;
  }
  for (int u : uses)
    if (u != 1) throw contract_error("non-substitution circuit used for theorem mode");

  const auto translate = [&](const Formula& f) -> Formula {
    if (identity) return f;
    const auto rewrite = [&](auto&& self, const Formula& g) -> Formula {
      switch (g.kind()) {
        case Formula::Kind::Const: return g;
        case Formula::Kind::Var: return Formula::Var(subst[a.index(g.atom())]);
        case Formula::Kind::Not: return Formula::Not(self(self, g.child()));
        case Formula::Kind::And: return Formula::And(self(self, g.lhs()), self(self, g.rhs()));
        case Formula::Kind::Or: return Formula::Or(self(self, g.lhs()), self(self, g.rhs()));
        case Formula::Kind::Implies:
          return Formula::Implies(self(self, g.lhs()), self(self, g.rhs()));
        default: return Formula::Iff(self(self, g.lhs()), self(self, g.rhs()));
      }
    };
    return rewrite(rewrite, f);
  };

  PreservationReport report;
  const auto universe = query_universe(a, size_of(kb1), policy);
  report.universe_size = universe.size();
  for (const Formula& phi : universe) {
    const bool left = infer(kb1, phi, limits);
    const bool right = infer(kb2, translate(phi), limits);
    if (left != right) record(report, to_string(phi), left, right);
  }
  report.pass = report.mismatch_count == 0;
  return report;
}

}  // namespace pkr
