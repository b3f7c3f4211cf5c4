#pragma once

#include <utility>
#include <vector>

#include "pkr/interpretation.hpp"

namespace pkr {

// A boolean gate DAG mapping interpretations over `inputs` to
// interpretations over the output atoms. Gates refer only to inputs and
// earlier gates, so a single forward pass evaluates the circuit.
struct BooleanCircuit {
  enum class GateOp { And, Or, Not, Const };

  struct Ref {
    bool is_input = false;
    int index = 0;  // input position or gate position

    friend bool operator==(const Ref& a, const Ref& b) {
      return a.is_input == b.is_input && a.index == b.index;
    }
  };

  struct Gate {
    GateOp op = GateOp::Const;
    bool const_value = false;
    std::vector<Ref> args;  // two for And/Or, one for Not, none for Const

    friend bool operator==(const Gate& a, const Gate& b) {
      return a.op == b.op && a.const_value == b.const_value && a.args == b.args;
    }
  };

  Alphabet inputs;
  std::vector<Gate> gates;
  std::vector<std::pair<Atom, Ref>> outputs;  // order defines the target alphabet

  Alphabet output_alphabet() const;

  // Passes every input through unchanged.
  static BooleanCircuit identity(const Alphabet& a);

  friend bool operator==(const BooleanCircuit& a, const BooleanCircuit& b) {
    return a.inputs == b.inputs && a.gates == b.gates && a.outputs == b.outputs;
  }
  friend bool operator!=(const BooleanCircuit& a, const BooleanCircuit& b) {
    return !(a == b);
  }
};

// Validates referential integrity; throws contract_error on dangling or
// forward references.
void validate(const BooleanCircuit& c);

// Topological evaluation; m must be over the circuit's input alphabet
// (eval_error otherwise).
Interpretation eval_circuit(const BooleanCircuit& c, const Interpretation& m);

// Appends gates computing f over the circuit's inputs and returns the
// resulting reference. Double negations collapse, so wiring the negation
// of a negated formula reuses the plain input.
BooleanCircuit::Ref compile_formula(BooleanCircuit& c, const Formula& f);

}  // namespace pkr
