#include "pkr/circuit.hpp"

#include "pkr/errors.hpp"

namespace pkr {

Alphabet BooleanCircuit::output_alphabet() const {
  std::vector<Atom> atoms;
  atoms.reserve(outputs.size());
  for (const auto& [atom, ref] : outputs) atoms.push_back(atom);
  return Alphabet(std::move(atoms));
}

BooleanCircuit BooleanCircuit::identity(const Alphabet& a) {
  BooleanCircuit c;
  c.inputs = a;
  for (int i = 0; i < a.size(); ++i) c.outputs.emplace_back(a.at(i), Ref{true, i});
  return c;
}

void validate(const BooleanCircuit& c) {
  const auto check_ref = [&](const BooleanCircuit::Ref& r, int gate_limit) {
    if (r.is_input) {
      if (r.index < 0 || r.index >= c.inputs.size())
        throw contract_error("circuit references input #" + std::to_string(r.index) +
                             " outside the input alphabet");
    } else if (r.index < 0 || r.index >= gate_limit) {
      throw contract_error("circuit references gate #" + std::to_string(r.index) +
                           " before its definition");
    }
  };
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const auto& gate = c.gates[g];
    const std::size_t want =
        gate.op == BooleanCircuit::GateOp::Const ? 0 : gate.op == BooleanCircuit::GateOp::Not ? 1 : 2;
    if (gate.args.size() != want)
      throw contract_error("gate #" + std::to_string(g) + " has the wrong arity");
    for (const auto& r : gate.args) check_ref(r, static_cast<int>(g));
  }
  for (const auto& [atom, ref] : c.outputs) check_ref(ref, static_cast<int>(c.gates.size()));
  c.output_alphabet();  // rejects duplicate output atoms
}

Interpretation eval_circuit(const BooleanCircuit& c, const Interpretation& m) {
  if (m.alphabet() != c.inputs) {
    // Permit an interpretation over a different alphabet only when its true
    // atoms all name declared inputs.
    for (const Atom& a : m.true_atoms())
      if (!c.inputs.contains(a))
        throw eval_error("undeclared input atom '" + a.name() + "'");
  }
  std::vector<bool> values(c.gates.size(), false);
  const auto value_of = [&](const BooleanCircuit::Ref& r) {
    return r.is_input ? m.contains(c.inputs.at(r.index)) : values[r.index];
  };
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const auto& gate = c.gates[g];
    switch (gate.op) {
      case BooleanCircuit::GateOp::Const: values[g] = gate.const_value; break;
      case BooleanCircuit::GateOp::Not: values[g] = !value_of(gate.args[0]); break;
      case BooleanCircuit::GateOp::And:
        values[g] = value_of(gate.args[0]) && value_of(gate.args[1]);
        break;
      case BooleanCircuit::GateOp::Or:
        values[g] = value_of(gate.args[0]) || value_of(gate.args[1]);
        break;
    }
  }
  const Alphabet target = c.output_alphabet();
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < c.outputs.size(); ++i)
    if (value_of(c.outputs[i].second)) mask |= std::uint32_t(1) << i;
  return Interpretation::of_mask(target, mask);
}

namespace {

BooleanCircuit::Ref add_gate(BooleanCircuit& c, BooleanCircuit::Gate gate) {
  c.gates.push_back(std::move(gate));
  return {false, static_cast<int>(c.gates.size() - 1)};
}

}  // namespace

BooleanCircuit::Ref compile_formula(BooleanCircuit& c, const Formula& f) {
  using Op = BooleanCircuit::GateOp;
  switch (f.kind()) {
    case Formula::Kind::Const:
      return add_gate(c, {Op::Const, f.value(), {}});
    case Formula::Kind::Var: {
      const int i = c.inputs.index(f.atom());
      if (i < 0) throw eval_error("undeclared input atom '" + f.atom().name() + "'");
      return {true, i};
    }
    case Formula::Kind::Not: {
      if (f.child().kind() == Formula::Kind::Not)
        return compile_formula(c, f.child().child());
      return add_gate(c, {Op::Not, false, {compile_formula(c, f.child())}});
    }
    case Formula::Kind::And:
      return add_gate(c, {Op::And, false,
                          {compile_formula(c, f.lhs()), compile_formula(c, f.rhs())}});
    case Formula::Kind::Or:
      return add_gate(c, {Op::Or, false,
                          {compile_formula(c, f.lhs()), compile_formula(c, f.rhs())}});
    case Formula::Kind::Implies: {
      const auto na = add_gate(c, {Op::Not, false, {compile_formula(c, f.lhs())}});
      return add_gate(c, {Op::Or, false, {na, compile_formula(c, f.rhs())}});
    }
    case Formula::Kind::Iff: {
      const auto a = compile_formula(c, f.lhs());
      const auto b = compile_formula(c, f.rhs());
      const auto both = add_gate(c, {Op::And, false, {a, b}});
      const auto na = add_gate(c, {Op::Not, false, {a}});
      const auto nb = add_gate(c, {Op::Not, false, {b}});
      const auto neither = add_gate(c, {Op::And, false, {na, nb}});
      return add_gate(c, {Op::Or, false, {both, neither}});
    }
  }
  throw contract_error("unreachable formula kind");
}

}  // namespace pkr
