#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pkr/errors.hpp"

namespace pkr {

// A propositional symbol. Names are lowercase-initial identifiers;
// "true" and "false" are reserved.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.name_ == b.name_; }
  friend bool operator!=(const Atom& a, const Atom& b) { return a.name_ != b.name_; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.name_ < b.name_; }

 private:
  std::string name_;
};

// An ordered, duplicate-free list of atoms. The order is fixed at
// construction and defines the canonical enumeration order of
// interpretations. Copies are cheap (shared immutable data).
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<Atom> atoms);

  static Alphabet of_names(std::initializer_list<const char*> names);

  int size() const;
  const Atom& at(int i) const;
  const std::vector<Atom>& atoms() const;
  // Position of the atom, or -1 when absent.
  int index(const Atom& a) const;
  bool contains(const Atom& a) const { return index(a) >= 0; }

  // New alphabet with the given atoms appended in first-use order
  // (atoms already present are kept at their position).
  Alphabet extended_with(std::span<const Atom> extra) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<Atom> atoms;
    std::map<std::string, int> index;
  };
  std::shared_ptr<const Data> d_;
};

// Immutable propositional formula AST. Value type; copies share nodes.
class Formula {
 public:
  enum class Kind { Const, Var, Not, And, Or, Implies, Iff };

  Formula();  // Const(true)

  static Formula True();
  static Formula False();
  static Formula Constant(bool value);
  static Formula Var(Atom a);
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);

  Kind kind() const;
  bool value() const;        // Const only
  const Atom& atom() const;  // Var only
  Formula child() const;     // Not only
  Formula lhs() const;       // binary only
  Formula rhs() const;       // binary only

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Formula make_unary(Kind k, Formula f);
  static Formula make_binary(Kind k, Formula lhs, Formula rhs);
  static const std::shared_ptr<const Node>& const_node(bool value);
  static bool node_eq(const Node* x, const Node* y);
  std::shared_ptr<const Node> n_;
};

// Right-nested conjunction/disjunction of a list; empty list gives the
// neutral element (true resp. false).
Formula conjunction_of(std::span<const Formula> fs);
Formula disjunction_of(std::span<const Formula> fs);

// Negation with a top-level double negation collapsed: negated(~p) = p.
Formula negated(const Formula& f);

// AST node count.
std::size_t size(const Formula& f);

// Variables of the formula in first-occurrence order.
std::vector<Atom> vars(const Formula& f);
void collect_vars(const Formula& f, std::vector<Atom>& out);

// Canonical text form, minimal parentheses, re-parses to an equal AST.
std::string to_string(const Formula& f);

// A finite multiset of formulas over a shared alphabet. The alphabet is
// extended in first-use order with any atom a formula mentions.
class KnowledgeBase {
 public:
  KnowledgeBase();
  explicit KnowledgeBase(std::vector<Formula> formulas);
  KnowledgeBase(Alphabet alphabet, std::vector<Formula> formulas);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t member_count() const { return formulas_.size(); }

  KnowledgeBase with_formula(Formula f) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.alphabet_ == b.alphabet_ && a.formulas_ == b.formulas_;
  }
  friend bool operator!=(const KnowledgeBase& a, const KnowledgeBase& b) {
    return !(a == b);
  }

 private:
  Alphabet alphabet_;
  std::vector<Formula> formulas_;
};

// Sum of member sizes plus member count.
std::size_t size(const KnowledgeBase& kb);

}  // namespace pkr
