#include "pkr/revision.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

RevisionInstance::RevisionInstance(KnowledgeBase base, Formula new_formula)
    : base_(std::move(base)), new_formula_(std::move(new_formula)) {
  const auto& fs = base_.formulas();
  const auto it = std::find(fs.begin(), fs.end(), new_formula_);
  if (it != fs.end()) {
    members_ = base_;
    new_index_ = static_cast<int>(it - fs.begin());
  } else {
    members_ = base_.with_formula(new_formula_);
    new_index_ = static_cast<int>(fs.size());
  }
}

namespace {

using Mask = std::uint32_t;

// Consistent member subsets containing A that no one-formula extension
// keeps consistent. Consistency of subsets is antitone, so checking the
// single-bit extensions suffices for maximality.
std::vector<Mask> maximal_masks(const RevisionInstance& r, const Limits& limits) {
  const auto& fs = r.members().formulas();
  const int count = static_cast<int>(fs.size());
  if (static_cast<int>(r.base().member_count()) > limits.revision_formulas)
    throw capacity_error("base of " + std::to_string(r.base().member_count()) +
                         " formulas exceeds the subset enumeration cap of " +
                         std::to_string(limits.revision_formulas));
  const Alphabet& a = r.alphabet();
  if (a.size() > limits.model_atoms)
    throw capacity_error("alphabet of " + std::to_string(a.size()) +
                         " atoms exceeds the model enumeration cap of " +
                         std::to_string(limits.model_atoms));

  std::vector<ModelSet> member_models;
  member_models.reserve(count);
  for (const Formula& f : fs) member_models.push_back(ModelSet::of(f, a));

  const auto consistent = [&](Mask m) {
    ModelSet s = ModelSet::all(a.size());
    for (int i = 0; i < count; ++i)
      if ((m >> i) & 1u) s &= member_models[i];
    return !s.empty();
  };

  const Mask a_bit = Mask(1) << r.new_formula_index();
  const Mask full = count == 32 ? ~Mask(0) : (Mask(1) << count) - 1;
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    if (!(m & a_bit) || !consistent(m)) continue;
    bool maximal = true;
    for (int i = 0; i < count && maximal; ++i) {
      const Mask bit = Mask(1) << i;
      if (!(m & bit) && consistent(m | bit)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

KnowledgeBase subset_kb(const RevisionInstance& r, Mask m) {
  std::vector<Formula> fs;
  const auto& all = r.members().formulas();
  for (std::size_t i = 0; i < all.size(); ++i)
    if ((m >> i) & 1u) fs.push_back(all[i]);
  return KnowledgeBase(r.alphabet(), std::move(fs));
}

}  // namespace

std::vector<KnowledgeBase> wka(const RevisionInstance& r, const Limits& limits) {
  std::vector<KnowledgeBase> out;
  for (Mask m : maximal_masks(r, limits)) out.push_back(subset_kb(r, m));
  return out;
}

bool sbr_entails(const RevisionInstance& r, const Formula& q, const Limits& limits) {
  for (Mask m : maximal_masks(r, limits))
    if (!entails(subset_kb(r, m), q, limits)) return false;
  return true;
}

bool sbr_model_check(const Interpretation& m, const RevisionInstance& r,
                     const Limits& limits) {
  const Interpretation over = m.alphabet() == r.alphabet() ? m : m.reinterpret(r.alphabet());
  const auto& fs = r.members().formulas();
  for (Mask subset : maximal_masks(r, limits)) {
    bool sat = true;
    for (std::size_t i = 0; i < fs.size() && sat; ++i)
      if ((subset >> i) & 1u) sat = eval(fs[i], over);
    if (sat) return true;
  }
  return false;
}

KnowledgeBase widtio_base(const RevisionInstance& r, const Limits& limits) {
  const auto masks = maximal_masks(r, limits);
  if (masks.empty()) return KnowledgeBase(r.alphabet(), {});
  Mask common = ~Mask(0);
  for (Mask m : masks) common &= m;
  return subset_kb(r, common);
}

bool widtio_entails(const RevisionInstance& r, const Formula& q, const Limits& limits) {
  return entails(widtio_base(r, limits), q, limits);
}

bool widtio_model_check(const Interpretation& m, const RevisionInstance& r,
                        const Limits& limits) {
  const Interpretation over = m.alphabet() == r.alphabet() ? m : m.reinterpret(r.alphabet());
  const KnowledgeBase base = widtio_base(r, limits);
  for (const Formula& f : base.formulas())
    if (!eval(f, over)) return false;
  return true;
}

std::size_t size(const RevisionInstance& r) {
  return size(r.base()) + size(r.new_formula());
}

}  // namespace pkr
