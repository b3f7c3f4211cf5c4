#include "pkr/formula.hpp"

#include <algorithm>
#include <cassert>

namespace pkr {

static bool valid_atom_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return s != "true" && s != "false";
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_atom_name(name_))
    throw contract_error("invalid atom name '" + name_ + "'");
}

Alphabet::Alphabet() : d_(std::make_shared<Data>()) {}

Alphabet::Alphabet(std::vector<Atom> atoms) {
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto [it, inserted] = d->index.emplace(atoms[i].name(), static_cast<int>(i));
    if (!inserted)
      throw contract_error("duplicate atom '" + atoms[i].name() + "' in alphabet");
  }
  d->atoms = std::move(atoms);
  d_ = std::move(d);
}

Alphabet Alphabet::of_names(std::initializer_list<const char*> names) {
  std::vector<Atom> atoms;
  atoms.reserve(names.size());
  for (const char* n : names) atoms.emplace_back(n);
  return Alphabet(std::move(atoms));
}

int Alphabet::size() const { return static_cast<int>(d_->atoms.size()); }

const Atom& Alphabet::at(int i) const { return d_->atoms.at(i); }

const std::vector<Atom>& Alphabet::atoms() const { return d_->atoms; }

int Alphabet::index(const Atom& a) const {
  auto it = d_->index.find(a.name());
  return it == d_->index.end() ? -1 : it->second;
}

Alphabet Alphabet::extended_with(std::span<const Atom> extra) const {
  bool any_new = false;
  for (const Atom& a : extra)
    if (!contains(a)) { any_new = true; break; }
  if (!any_new) return *this;
  std::vector<Atom> atoms = d_->atoms;
  for (const Atom& a : extra) {
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  }
  return Alphabet(std::move(atoms));
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  return a.d_ == b.d_ || a.d_->atoms == b.d_->atoms;
}

struct Formula::Node {
  Kind kind;
  bool value = false;
  Atom atom;
  std::shared_ptr<const Node> a;  // child / lhs
  std::shared_ptr<const Node> b;  // rhs
};

Formula::Formula() : n_(const_node(true)) {}

Formula Formula::True() { return Formula(const_node(true)); }
Formula Formula::False() { return Formula(const_node(false)); }
Formula Formula::Constant(bool value) { return value ? True() : False(); }

Formula Formula::Var(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::make_unary(Formula::Kind k, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(f.n_);
  return Formula(std::move(n));
}

Formula Formula::make_binary(Formula::Kind k, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(lhs.n_);
  n->b = std::move(rhs.n_);
  return Formula(std::move(n));
}

Formula Formula::Not(Formula f) { return make_unary(Kind::Not, std::move(f)); }
Formula Formula::And(Formula l, Formula r) { return make_binary(Kind::And, std::move(l), std::move(r)); }
Formula Formula::Or(Formula l, Formula r) { return make_binary(Kind::Or, std::move(l), std::move(r)); }
Formula Formula::Implies(Formula l, Formula r) { return make_binary(Kind::Implies, std::move(l), std::move(r)); }
Formula Formula::Iff(Formula l, Formula r) { return make_binary(Kind::Iff, std::move(l), std::move(r)); }

const std::shared_ptr<const Formula::Node>& Formula::const_node(bool value) {
  static const auto t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = true;
    return std::shared_ptr<const Node>(n);
  }();
  static const auto f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = false;
    return std::shared_ptr<const Node>(n);
  }();
  return value ? t : f;
}

Formula::Kind Formula::kind() const { return n_->kind; }
bool Formula::value() const {
  assert(n_->kind == Kind::Const);
  return n_->value;
}
const Atom& Formula::atom() const {
  assert(n_->kind == Kind::Var);
  return n_->atom;
}
Formula Formula::child() const {
  assert(n_->kind == Kind::Not);
  return Formula(n_->a);
}
Formula Formula::lhs() const { return Formula(n_->a); }
Formula Formula::rhs() const { return Formula(n_->b); }

bool Formula::node_eq(const Node* x, const Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Kind::Const: return x->value == y->value;
    case Kind::Var: return x->atom == y->atom;
    case Kind::Not: return node_eq(x->a.get(), y->a.get());
    default: return node_eq(x->a.get(), y->a.get()) && node_eq(x->b.get(), y->b.get());
  }
}

bool operator==(const Formula& x, const Formula& y) {
  return Formula::node_eq(x.n_.get(), y.n_.get());
}

Formula conjunction_of(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::True();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::And(fs[i], acc);
  return acc;
}

Formula disjunction_of(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::False();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::Or(fs[i], acc);
  return acc;
}

Formula negated(const Formula& f) {
  if (f.kind() == Formula::Kind::Not) return f.child();
  return Formula::Not(f);
}

std::size_t size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var: return 1;
    case Formula::Kind::Not: return 1 + size(f.child());
    default: return 1 + size(f.lhs()) + size(f.rhs());
  }
}

void collect_vars(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::Const: return;
    case Formula::Kind::Var:
      if (std::find(out.begin(), out.end(), f.atom()) == out.end())
        out.push_back(f.atom());
      return;
    case Formula::Kind::Not: collect_vars(f.child(), out); return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
  }
}

std::vector<Atom> vars(const Formula& f) {
  std::vector<Atom> out;
  collect_vars(f, out);
  return out;
}

namespace {

// Higher binds tighter; matches the parser.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

const char* op_token(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return " <-> ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    default: return " & ";
  }
}

// All binary connectives parse right-associatively, so a left child at
// the same precedence level needs parentheses while a right child does not.
void print(const Formula& f, int min_prec, std::string& out) {
  const int p = precedence(f.kind());
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Const:
      out += f.value() ? "true" : "false";
      break;
    case Formula::Kind::Var:
      out += f.atom().name();
      break;
    case Formula::Kind::Not:
      out += '~';
      print(f.child(), p, out);
      break;
    default:
      print(f.lhs(), p + 1, out);
      out += op_token(f.kind());
      print(f.rhs(), p, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

KnowledgeBase::KnowledgeBase() = default;

KnowledgeBase::KnowledgeBase(std::vector<Formula> formulas)
    : KnowledgeBase(Alphabet(), std::move(formulas)) {}

KnowledgeBase::KnowledgeBase(Alphabet alphabet, std::vector<Formula> formulas)
    : alphabet_(std::move(alphabet)), formulas_(std::move(formulas)) {
  std::vector<Atom> used;
  for (const Formula& f : formulas_) collect_vars(f, used);
  alphabet_ = alphabet_.extended_with(used);
}

KnowledgeBase KnowledgeBase::with_formula(Formula f) const {
  std::vector<Formula> fs = formulas_;
  fs.push_back(std::move(f));
  return KnowledgeBase(alphabet_, std::move(fs));
}

std::size_t size(const KnowledgeBase& kb) {
  std::size_t total = kb.member_count();
  for (const Formula& f : kb.formulas()) total += size(f);
  return total;
}

}  // namespace pkr
