#include "pkr/default_logic.hpp"

#include <algorithm>
#include <bit>

#include "pkr/errors.hpp"

namespace pkr {

DefaultTheory::DefaultTheory(KnowledgeBase background, std::vector<DefaultRule> defaults)
    : background_(std::move(background)), defaults_(std::move(defaults)) {
  std::vector<Atom> used;
  for (const DefaultRule& d : defaults_) {
    collect_vars(d.prerequisite, used);
    for (const Formula& j : d.justifications) collect_vars(j, used);
    collect_vars(d.consequent, used);
  }
  background_ = KnowledgeBase(background_.alphabet().extended_with(used),
                              background_.formulas());
}

namespace {

using Mask = std::uint32_t;

struct RuleSets {
  ModelSet pre = ModelSet::none(0);
  std::vector<ModelSet> justs;
  ModelSet cons = ModelSet::none(0);
  bool no_just = false;
};

struct Ctx {
  const DefaultTheory& dt;
  int n_rules;
  ModelSet w_models;
  std::vector<RuleSets> rules;

  explicit Ctx(const DefaultTheory& theory, const Limits& limits)
      : dt(theory), n_rules(static_cast<int>(theory.defaults().size())),
        w_models(ModelSet::none(0)) {
    if (n_rules > limits.default_rules)
      throw capacity_error("theory with " + std::to_string(n_rules) +
                           " defaults exceeds the extension search cap of " +
                           std::to_string(limits.default_rules));
    const Alphabet& a = dt.alphabet();
    if (a.size() > limits.model_atoms)
      throw capacity_error("alphabet of " + std::to_string(a.size()) +
                           " atoms exceeds the model enumeration cap of " +
                           std::to_string(limits.model_atoms));
    w_models = ModelSet::all(a.size());
    for (const Formula& f : dt.background().formulas())
      w_models &= ModelSet::of(f, a);
    rules.reserve(n_rules);
    for (const DefaultRule& d : dt.defaults()) {
      RuleSets rs;
      rs.pre = ModelSet::of(d.prerequisite, a);
      for (const Formula& j : d.justifications) rs.justs.push_back(ModelSet::of(j, a));
      rs.cons = ModelSet::of(d.consequent, a);
      rs.no_just = d.justifications.empty();
      rules.push_back(std::move(rs));
    }
  }

  ModelSet base_models(Mask gd) const {
    ModelSet e = w_models;
    for (int i = 0; i < n_rules; ++i)
      if ((gd >> i) & 1u) e &= rules[i].cons;
    return e;
  }

  bool applicable(int i, const ModelSet& e) const {
    if (!e.subset_of(rules[i].pre)) return false;
    for (const ModelSet& j : rules[i].justs)
      if (!e.intersects(j)) return false;
    return true;
  }

  bool grounded(Mask gd) const {
    ModelSet s = w_models;
    Mask remaining = gd;
    while (remaining) {
      bool placed = false;
      for (int i = 0; i < n_rules && !placed; ++i) {
        if (((remaining >> i) & 1u) && s.subset_of(rules[i].pre)) {
          s &= rules[i].cons;
          remaining &= ~(Mask(1) << i);
          placed = true;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  bool check(Mask gd) const {
    const ModelSet e = base_models(gd);
    for (int i = 0; i < n_rules; ++i)
      if (applicable(i, e) != bool((gd >> i) & 1u)) return false;
    return grounded(gd);
  }

  Mask no_just_mask() const {
    Mask m = 0;
    for (int i = 0; i < n_rules; ++i)
      if (rules[i].no_just) m |= Mask(1) << i;
    return m;
  }
};

// One decision per unpaired rule; a pair is decided jointly.
struct Decision {
  int first;
  int second;  // -1 when single
};

bool normal_pfn(const DefaultRule& d) {
  return d.prerequisite == Formula::True() && d.justifications.size() == 1 &&
         d.justifications[0] == d.consequent;
}

std::vector<Decision> plan_decisions(const DefaultTheory& dt) {
  const auto& ds = dt.defaults();
  const int n = static_cast<int>(ds.size());
  std::vector<int> partner(n, -1);
  for (int i = 0; i < n; ++i) {
    if (partner[i] >= 0 || !normal_pfn(ds[i])) continue;
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] >= 0 || !normal_pfn(ds[j])) continue;
      if (ds[j].consequent == negated(ds[i].consequent) ||
          ds[i].consequent == negated(ds[j].consequent)) {
        partner[i] = j;
        partner[j] = i;
        break;
      }
    }
  }
  std::vector<Decision> plan;
  for (int i = 0; i < n; ++i) {
    if (partner[i] > i)
      plan.push_back({i, partner[i]});
    else if (partner[i] < 0)
      plan.push_back({i, -1});
  }
  return plan;
}

struct Search {
  const Ctx& ctx;
  const std::vector<Decision>& plan;
  std::vector<Mask> found;

  // A chosen rule whose justification the partial base already refutes can
  // never be applicable in the final (smaller) base, so the branch is dead.
  bool include_viable(int i, const ModelSet& e) const {
    for (const ModelSet& j : ctx.rules[i].justs)
      if (!e.intersects(j)) return false;
    return true;
  }

  void dfs(std::size_t k, Mask gd, const ModelSet& e) {
    if (e.empty()) return;  // inconsistent bases are handled separately
    if (k == plan.size()) {
      if (ctx.check(gd)) found.push_back(gd);
      return;
    }
    const Decision& d = plan[k];
    if (d.second >= 0) {
      // Exactly one side of a complementary normal pair can generate.
      for (int side : {d.first, d.second}) {
        ModelSet e2 = e;
        e2 &= ctx.rules[side].cons;
        if (!e2.empty()) dfs(k + 1, gd | (Mask(1) << side), e2);
      }
      return;
    }
    ModelSet e2 = e;
    e2 &= ctx.rules[d.first].cons;
    if (!e2.empty() && include_viable(d.first, e2))
      dfs(k + 1, gd | (Mask(1) << d.first), e2);
    dfs(k + 1, gd, e);
  }
};

std::vector<Mask> extension_masks(const Ctx& ctx, const DefaultTheory& dt) {
  // An extension with an inconsistent base makes every prerequisite hold
  // and every justification fail, so its generating set must be exactly
  // the justification-free defaults. The search below only visits
  // consistent bases, so this is the one candidate it cannot reach.
  std::vector<Mask> found;
  const Mask j0 = ctx.no_just_mask();
  if (ctx.base_models(j0).empty() && ctx.check(j0)) found.push_back(j0);

  const std::vector<Decision> plan = plan_decisions(dt);
  Search search{ctx, plan, {}};
  search.dfs(0, 0, ctx.w_models);
  found.insert(found.end(), search.found.begin(), search.found.end());
  std::sort(found.begin(), found.end());
  return found;
}

KnowledgeBase base_kb(const DefaultTheory& dt, Mask gd) {
  std::vector<Formula> fs = dt.background().formulas();
  for (std::size_t i = 0; i < dt.defaults().size(); ++i)
    if ((gd >> i) & 1u) fs.push_back(dt.defaults()[i].consequent);
  return KnowledgeBase(dt.alphabet(), std::move(fs));
}

}  // namespace

bool reiter_check(const DefaultTheory& dt, const std::vector<int>& gd, const Limits& limits) {
  const Ctx ctx(dt, limits);
  Mask mask = 0;
  for (int i : gd) {
    if (i < 0 || i >= ctx.n_rules)
      throw contract_error("generating-default index " + std::to_string(i) +
                           " out of range");
    mask |= Mask(1) << i;
  }
  return ctx.check(mask);
}

std::vector<Extension> extensions(const DefaultTheory& dt, const Limits& limits) {
  const Ctx ctx(dt, limits);
  std::vector<Extension> out;
  for (Mask gd : extension_masks(ctx, dt)) {
    Extension e;
    for (int i = 0; i < ctx.n_rules; ++i)
      if ((gd >> i) & 1u) e.generating.push_back(i);
    e.base = base_kb(dt, gd);
    out.push_back(std::move(e));
  }
  return out;
}

bool credulous_entails(const DefaultTheory& dt, const Formula& q, const Limits& limits) {
  for (const Atom& v : vars(q))
    if (!dt.alphabet().contains(v))
      throw contract_error("query mentions atom '" + v.name() +
                           "' outside the theory's alphabet");
  const Ctx ctx(dt, limits);
  const ModelSet qs = ModelSet::of(q, dt.alphabet());
  for (Mask gd : extension_masks(ctx, dt))
    if (ctx.base_models(gd).subset_of(qs)) return true;
  return false;
}

bool skeptical_entails(const DefaultTheory& dt, const Formula& q, const Limits& limits) {
  for (const Atom& v : vars(q))
    if (!dt.alphabet().contains(v))
      throw contract_error("query mentions atom '" + v.name() +
                           "' outside the theory's alphabet");
  const Ctx ctx(dt, limits);
  const ModelSet qs = ModelSet::of(q, dt.alphabet());
  for (Mask gd : extension_masks(ctx, dt))
    if (!ctx.base_models(gd).subset_of(qs)) return false;
  return true;
}

bool model_of_some_extension(const Interpretation& m, const DefaultTheory& dt,
                             const Limits& limits) {
  const Interpretation over =
      m.alphabet() == dt.alphabet() ? m : m.reinterpret(dt.alphabet());
  const Ctx ctx(dt, limits);
  for (Mask gd : extension_masks(ctx, dt))
    if (ctx.base_models(gd).test(over.mask())) return true;
  return false;
}

std::size_t size(const DefaultRule& r) {
  std::size_t total = 1 + size(r.prerequisite) + size(r.consequent);
  for (const Formula& j : r.justifications) total += size(j);
  return total;
}

std::size_t size(const DefaultTheory& dt) {
  std::size_t total = size(dt.background()) + dt.defaults().size();
  for (const DefaultRule& d : dt.defaults()) total += size(d);
  return total;
}

}  // namespace pkr
