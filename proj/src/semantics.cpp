#include "pkr/semantics.hpp"

#include <algorithm>
#include <bit>

#include "pkr/errors.hpp"

namespace pkr {

bool eval(const Formula& f, const Interpretation& m) {
  switch (f.kind()) {
    case Formula::Kind::Const: return f.value();
    case Formula::Kind::Var: {
      const int i = m.alphabet().index(f.atom());
      if (i < 0) throw eval_error("unknown atom '" + f.atom().name() + "'");
      return (m.mask() >> i) & 1u;
    }
    case Formula::Kind::Not: return !eval(f.child(), m);
    case Formula::Kind::And: return eval(f.lhs(), m) && eval(f.rhs(), m);
    case Formula::Kind::Or: return eval(f.lhs(), m) || eval(f.rhs(), m);
    case Formula::Kind::Implies: return !eval(f.lhs(), m) || eval(f.rhs(), m);
    case Formula::Kind::Iff: return eval(f.lhs(), m) == eval(f.rhs(), m);
  }
  return false;
}

CompiledFormula::CompiledFormula(const Formula& f, const Alphabet& a) {
  // Explicit stack; formulas from reductions can be deeply right-nested.
  std::vector<std::pair<Formula, bool>> work;
  work.emplace_back(f, false);
  while (!work.empty()) {
    auto [node, expanded] = work.back();
    work.pop_back();
    if (expanded) {
      ops_.push_back({node.kind(), 0, false});
      continue;
    }
    switch (node.kind()) {
      case Formula::Kind::Const:
        ops_.push_back({Formula::Kind::Const, 0, node.value()});
        break;
      case Formula::Kind::Var: {
        const int i = a.index(node.atom());
        if (i < 0) throw eval_error("unknown atom '" + node.atom().name() + "'");
        ops_.push_back({Formula::Kind::Var, i, false});
        break;
      }
      case Formula::Kind::Not:
        work.emplace_back(node, true);
        work.emplace_back(node.child(), false);
        break;
      default:
        work.emplace_back(node, true);
        work.emplace_back(node.rhs(), false);
        work.emplace_back(node.lhs(), false);
        break;
    }
  }
  stack_.reserve(ops_.size());
}

bool CompiledFormula::eval_mask(std::uint32_t mask) const {
  stack_.clear();
  for (const Op& op : ops_) {
    switch (op.kind) {
      case Formula::Kind::Const:
        stack_.push_back(op.value);
        break;
      case Formula::Kind::Var:
        stack_.push_back((mask >> op.var_bit) & 1u);
        break;
      case Formula::Kind::Not:
        stack_.back() = !stack_.back();
        break;
      default: {
        const bool r = stack_.back();
        stack_.pop_back();
        const bool l = stack_.back();
        bool v = false;
        switch (op.kind) {
          case Formula::Kind::And: v = l && r; break;
          case Formula::Kind::Or: v = l || r; break;
          case Formula::Kind::Implies: v = !l || r; break;
          default: v = l == r; break;
        }
        stack_.back() = v;
        break;
      }
    }
  }
  return stack_.back();
}

ModelSet::ModelSet(int n_atoms) : n_atoms_(n_atoms) {
  const std::uint64_t bits = std::uint64_t(1) << n_atoms;
  words_.assign((bits + 63) / 64, 0);
}

ModelSet ModelSet::none(int n_atoms) { return ModelSet(n_atoms); }

ModelSet ModelSet::all(int n_atoms) {
  ModelSet s(n_atoms);
  const std::uint64_t bits = std::uint64_t(1) << n_atoms;
  for (auto& w : s.words_) w = ~std::uint64_t(0);
  if (bits % 64 != 0) s.words_.back() = (std::uint64_t(1) << (bits % 64)) - 1;
  return s;
}

ModelSet ModelSet::of(const Formula& f, const Alphabet& a) {
  ModelSet s(a.size());
  const CompiledFormula cf(f, a);
  const std::uint64_t n = std::uint64_t(1) << a.size();
  for (std::uint64_t mask = 0; mask < n; ++mask)
    if (cf.eval_mask(static_cast<std::uint32_t>(mask)))
      s.words_[mask >> 6] |= std::uint64_t(1) << (mask & 63);
  return s;
}

bool ModelSet::test(std::uint32_t mask) const {
  return (words_[mask >> 6] >> (mask & 63)) & 1u;
}

void ModelSet::set(std::uint32_t mask) {
  words_[mask >> 6] |= std::uint64_t(1) << (mask & 63);
}

ModelSet& ModelSet::operator&=(const ModelSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool ModelSet::subset_of(const ModelSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ModelSet::intersects(const ModelSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool ModelSet::empty() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::uint64_t ModelSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

namespace {

void check_model_cap(const Alphabet& a, const Limits& limits) {
  if (a.size() > limits.model_atoms)
    throw capacity_error("alphabet of " + std::to_string(a.size()) +
                         " atoms exceeds the model enumeration cap of " +
                         std::to_string(limits.model_atoms));
}

void check_kb_within(const KnowledgeBase& kb, const Alphabet& a) {
  for (const Formula& f : kb.formulas())
    for (const Atom& v : vars(f))
      if (!a.contains(v))
        throw contract_error("knowledge base mentions atom '" + v.name() +
                             "' outside the given alphabet");
}

std::vector<CompiledFormula> compile_kb(const KnowledgeBase& kb, const Alphabet& a) {
  std::vector<CompiledFormula> cs;
  cs.reserve(kb.member_count());
  for (const Formula& f : kb.formulas()) cs.emplace_back(f, a);
  return cs;
}

bool satisfies_all(const std::vector<CompiledFormula>& cs, std::uint32_t mask) {
  for (const CompiledFormula& c : cs)
    if (!c.eval_mask(mask)) return false;
  return true;
}

}  // namespace

std::vector<std::uint32_t> all_model_masks(const KnowledgeBase& kb, const Alphabet& a,
                                           const Limits& limits) {
  check_model_cap(a, limits);
  check_kb_within(kb, a);
  const auto cs = compile_kb(kb, a);
  std::vector<std::uint32_t> out;
  const std::uint64_t n = std::uint64_t(1) << a.size();
  for (std::uint64_t mask = 0; mask < n; ++mask)
    if (satisfies_all(cs, static_cast<std::uint32_t>(mask)))
      out.push_back(static_cast<std::uint32_t>(mask));
  return out;
}

std::vector<Interpretation> all_models(const KnowledgeBase& kb, const Alphabet& a,
                                       const Limits& limits) {
  std::vector<Interpretation> out;
  for (std::uint32_t mask : all_model_masks(kb, a, limits))
    out.push_back(Interpretation::of_mask(a, mask));
  return out;
}

bool entails(const KnowledgeBase& kb, const Formula& phi, const Limits& limits) {
  const Alphabet a = kb.alphabet().extended_with(vars(phi));
  check_model_cap(a, limits);
  const auto cs = compile_kb(kb, a);
  const CompiledFormula q(phi, a);
  const std::uint64_t n = std::uint64_t(1) << a.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    const auto m = static_cast<std::uint32_t>(mask);
    if (satisfies_all(cs, m) && !q.eval_mask(m)) return false;
  }
  return true;
}

bool is_consistent(const KnowledgeBase& kb, const Limits& limits) {
  const Alphabet& a = kb.alphabet();
  check_model_cap(a, limits);
  const auto cs = compile_kb(kb, a);
  const std::uint64_t n = std::uint64_t(1) << a.size();
  for (std::uint64_t mask = 0; mask < n; ++mask)
    if (satisfies_all(cs, static_cast<std::uint32_t>(mask))) return true;
  return false;
}

std::vector<std::uint32_t> minimal_model_masks(const KnowledgeBase& kb, const Alphabet& a,
                                               const Limits& limits) {
  std::vector<std::uint32_t> models = all_model_masks(kb, a, limits);
  // Ascending popcount: a model is minimal iff no already-kept minimal
  // model is a strict subset of it.
  std::vector<std::uint32_t> by_count = models;
  std::stable_sort(by_count.begin(), by_count.end(),
                   [](std::uint32_t x, std::uint32_t y) {
                     return std::popcount(x) < std::popcount(y);
                   });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : by_count) {
    bool dominated = false;
    for (std::uint32_t k : minimal)
      if (k != m && (k & ~m) == 0) { dominated = true; break; }
    if (!dominated) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<Interpretation> minimal_models(const KnowledgeBase& kb, const Alphabet& a,
                                           const Limits& limits) {
  std::vector<Interpretation> out;
  for (std::uint32_t mask : minimal_model_masks(kb, a, limits))
    out.push_back(Interpretation::of_mask(a, mask));
  return out;
}

Formula conjunction_of_literals(const Interpretation& m, const Alphabet& a) {
  if (m.alphabet() != a)
    throw contract_error("interpretation is not over the given alphabet");
  std::vector<Formula> lits;
  lits.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) {
    Formula v = Formula::Var(a.at(i));
    lits.push_back((m.mask() >> i) & 1u ? v : Formula::Not(v));
  }
  return conjunction_of(lits);
}

}  // namespace pkr
