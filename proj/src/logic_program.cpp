#include "pkr/logic_program.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

ProgramRule::ProgramRule(Atom h, std::vector<Atom> positive, std::vector<Atom> negative)
    : head(std::move(h)), positive_body(std::move(positive)), negative_body(std::move(negative)) {
  std::sort(positive_body.begin(), positive_body.end());
  positive_body.erase(std::unique(positive_body.begin(), positive_body.end()),
                      positive_body.end());
  std::sort(negative_body.begin(), negative_body.end());
  negative_body.erase(std::unique(negative_body.begin(), negative_body.end()),
                      negative_body.end());
}

LogicProgram::LogicProgram(std::vector<ProgramRule> rules)
    : LogicProgram(Alphabet(), std::move(rules)) {}

LogicProgram::LogicProgram(Alphabet alphabet, std::vector<ProgramRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  std::vector<Atom> used;
  const auto add = [&used](const Atom& a) {
    if (std::find(used.begin(), used.end(), a) == used.end()) used.push_back(a);
  };
  for (const ProgramRule& r : rules_) {
    add(r.head);
    for (const Atom& a : r.positive_body) add(a);
    for (const Atom& a : r.negative_body) add(a);
  }
  alphabet_ = alphabet_.extended_with(used);
}

namespace {

using Mask = std::uint32_t;

struct MaskRule {
  Mask head;
  Mask positive;
  Mask negative;
};

std::vector<MaskRule> mask_rules(const LogicProgram& p) {
  const Alphabet& a = p.alphabet();
  std::vector<MaskRule> out;
  out.reserve(p.rules().size());
  for (const ProgramRule& r : p.rules()) {
    MaskRule mr{Mask(1) << a.index(r.head), 0, 0};
    for (const Atom& x : r.positive_body) mr.positive |= Mask(1) << a.index(x);
    for (const Atom& x : r.negative_body) mr.negative |= Mask(1) << a.index(x);
    out.push_back(mr);
  }
  return out;
}

Mask least_model_mask(const std::vector<MaskRule>& rules) {
  Mask cur = 0;
  for (;;) {
    Mask next = cur;
    for (const MaskRule& r : rules)
      if ((r.positive & ~cur) == 0) next |= r.head;
    if (next == cur) return cur;
    cur = next;
  }
}

bool stable_mask(const std::vector<MaskRule>& rules, Mask m) {
  Mask cur = 0;
  for (;;) {
    Mask next = cur;
    for (const MaskRule& r : rules)
      if ((r.negative & m) == 0 && (r.positive & ~cur) == 0) next |= r.head;
    if (next == cur) break;
    cur = next;
  }
  return cur == m;
}

void require_same_alphabet(const LogicProgram& p, const Interpretation& m) {
  if (m.alphabet() != p.alphabet())
    throw contract_error("interpretation is not over the program's alphabet");
}

}  // namespace

LogicProgram reduct(const LogicProgram& p, const Interpretation& m) {
  require_same_alphabet(p, m);
  std::vector<ProgramRule> rules;
  for (const ProgramRule& r : p.rules()) {
    bool deleted = false;
    for (const Atom& x : r.negative_body)
      if (m.contains(x)) { deleted = true; break; }
    if (!deleted) rules.push_back(ProgramRule(r.head, r.positive_body, {}));
  }
  return LogicProgram(p.alphabet(), std::move(rules));
}

Interpretation least_model(const LogicProgram& p) {
  for (const ProgramRule& r : p.rules())
    if (!r.negative_body.empty())
      throw contract_error("least model requires a negation-free program; rule for '" +
                           r.head.name() + "' has a negative body");
  return Interpretation::of_mask(p.alphabet(), least_model_mask(mask_rules(p)));
}

bool is_stable(const Interpretation& m, const LogicProgram& p) {
  require_same_alphabet(p, m);
  return stable_mask(mask_rules(p), m.mask());
}

namespace {

struct ChoicePlan {
  // Pair (x, y) of atom positions; stable models hold exactly one of them.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> free_atoms;
};

ChoicePlan plan_candidates(const LogicProgram& p) {
  const Alphabet& a = p.alphabet();
  const int n = a.size();
  // head_rule[i] = unique rule index with head i, or -1/-2.
  std::vector<int> head_rule(n, -1);
  for (std::size_t r = 0; r < p.rules().size(); ++r) {
    const int h = a.index(p.rules()[r].head);
    head_rule[h] = head_rule[h] == -1 ? static_cast<int>(r) : -2;
  }
  const auto pair_shape = [&](int atom) -> int {
    // Requires: atom heads exactly one rule of the shape `atom :- not y`.
    if (head_rule[atom] < 0) return -1;
    const ProgramRule& r = p.rules()[head_rule[atom]];
    if (!r.positive_body.empty() || r.negative_body.size() != 1) return -1;
    const int y = a.index(r.negative_body[0]);
    return y == atom ? -1 : y;
  };
  ChoicePlan plan;
  std::vector<bool> paired(n, false);
  for (int x = 0; x < n; ++x) {
    if (paired[x]) continue;
    const int y = pair_shape(x);
    if (y > x && !paired[y] && pair_shape(y) == x) {
      plan.pairs.emplace_back(x, y);
      paired[x] = paired[y] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!paired[i]) plan.free_atoms.push_back(i);
  return plan;
}

}  // namespace

std::vector<Interpretation> stable_models(const LogicProgram& p, const Limits& limits) {
  const int n = p.alphabet().size();
  if (n > limits.program_atoms)
    throw capacity_error("program alphabet of " + std::to_string(n) +
                         " atoms exceeds the stable-model enumeration cap of " +
                         std::to_string(limits.program_atoms));
  const auto rules = mask_rules(p);
  const ChoicePlan plan = plan_candidates(p);

  std::vector<Mask> stable;
  const std::uint64_t free_count = std::uint64_t(1) << plan.free_atoms.size();
  const std::uint64_t pair_count = std::uint64_t(1) << plan.pairs.size();
  for (std::uint64_t f = 0; f < free_count; ++f) {
    Mask base = 0;
    for (std::size_t i = 0; i < plan.free_atoms.size(); ++i)
      if ((f >> i) & 1u) base |= Mask(1) << plan.free_atoms[i];
    for (std::uint64_t c = 0; c < pair_count; ++c) {
      Mask m = base;
      for (std::size_t i = 0; i < plan.pairs.size(); ++i)
        m |= Mask(1) << ((c >> i) & 1u ? plan.pairs[i].second : plan.pairs[i].first);
      if (stable_mask(rules, m)) stable.push_back(m);
    }
  }
  std::sort(stable.begin(), stable.end());

  std::vector<Interpretation> out;
  out.reserve(stable.size());
  for (Mask m : stable) out.push_back(Interpretation::of_mask(p.alphabet(), m));
  return out;
}

bool sm_entails(const LogicProgram& p, const Formula& q, const Limits& limits) {
  for (const Atom& v : vars(q))
    if (!p.alphabet().contains(v))
      throw contract_error("query mentions atom '" + v.name() +
                           "' outside the program's alphabet");
  const CompiledFormula cq(q, p.alphabet());
  for (const Interpretation& m : stable_models(p, limits))
    if (!cq.eval_mask(m.mask())) return false;
  return true;
}

std::size_t size(const ProgramRule& r) {
  return 1 + r.positive_body.size() + r.negative_body.size();
}

std::size_t size(const LogicProgram& p) {
  std::size_t total = p.rules().size();
  for (const ProgramRule& r : p.rules()) total += size(r);
  return total;
}

}  // namespace pkr
