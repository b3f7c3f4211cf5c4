#include "pkr/circumscription.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

CircKb::CircKb(KnowledgeBase theory, std::vector<Atom> minimized,
               std::vector<Atom> fixed, std::vector<Atom> varying)
    : theory_(std::move(theory)),
      minimized_(std::move(minimized)),
      fixed_(std::move(fixed)),
      varying_(std::move(varying)) {
  std::vector<Atom> all = minimized_;
  all.insert(all.end(), fixed_.begin(), fixed_.end());
  all.insert(all.end(), varying_.begin(), varying_.end());
  theory_ = KnowledgeBase(theory_.alphabet().extended_with(all), theory_.formulas());

  const Alphabet& a = theory_.alphabet();
  std::uint32_t z_mask = 0;
  const auto mask_of = [&](const std::vector<Atom>& atoms, const char* which) {
    std::uint32_t m = 0;
    for (const Atom& atom : atoms) {
      const std::uint32_t bit = std::uint32_t(1) << a.index(atom);
      if (m & bit)
        throw contract_error("atom '" + atom.name() + "' listed twice in " + which);
      m |= bit;
    }
    return m;
  };
  p_mask_ = mask_of(minimized_, "the minimized letters");
  q_mask_ = mask_of(fixed_, "the fixed letters");
  z_mask = mask_of(varying_, "the varying letters");
  if ((p_mask_ & q_mask_) || (p_mask_ & z_mask) || (q_mask_ & z_mask))
    throw contract_error("minimized, fixed and varying letters must be disjoint");

  // Letters not assigned to any part are fixed.
  for (int i = 0; i < a.size(); ++i) {
    const std::uint32_t bit = std::uint32_t(1) << i;
    if (!((p_mask_ | q_mask_ | z_mask) & bit)) {
      q_mask_ |= bit;
      fixed_.push_back(a.at(i));
    }
  }
}

bool circ_preferred(const Interpretation& m1, const Interpretation& m2, const CircKb& c) {
  if (m1.alphabet() != c.alphabet() || m2.alphabet() != c.alphabet())
    throw contract_error("interpretations are not over the theory's alphabet");
  const std::uint32_t p = c.minimized_mask(), q = c.fixed_mask();
  const std::uint32_t p1 = m1.mask() & p, p2 = m2.mask() & p;
  return (m1.mask() & q) == (m2.mask() & q) && p1 != p2 && (p1 & ~p2) == 0;
}

namespace {

std::vector<std::uint32_t> circ_model_masks(const CircKb& c, const Limits& limits) {
  const auto models = all_model_masks(c.theory(), c.alphabet(), limits);
  const std::uint32_t p = c.minimized_mask(), q = c.fixed_mask();
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : models) {
    bool dominated = false;
    for (std::uint32_t other : models) {
      const std::uint32_t pm = m & p, po = other & p;
      if ((other & q) == (m & q) && po != pm && (po & ~pm) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<Interpretation> circ_models(const CircKb& c, const Limits& limits) {
  std::vector<Interpretation> out;
  for (std::uint32_t m : circ_model_masks(c, limits))
    out.push_back(Interpretation::of_mask(c.alphabet(), m));
  return out;
}

bool circ_model_check(const Interpretation& m, const CircKb& c, const Limits& limits) {
  const Interpretation over = m.alphabet() == c.alphabet() ? m : m.reinterpret(c.alphabet());
  const auto masks = circ_model_masks(c, limits);
  return std::find(masks.begin(), masks.end(), over.mask()) != masks.end();
}

bool circ_entails(const CircKb& c, const Formula& phi, const Limits& limits) {
  // Query atoms outside the theory's alphabet are treated as fixed and
  // unconstrained, which matches classical entailment on the extension.
  const Alphabet ext = c.alphabet().extended_with(vars(phi));
  if (ext != c.alphabet()) {
    const CircKb widened(KnowledgeBase(ext, c.theory().formulas()), c.minimized(),
                         c.fixed(), c.varying());
    return circ_entails(widened, phi, limits);
  }
  const CompiledFormula q(phi, c.alphabet());
  for (std::uint32_t m : circ_model_masks(c, limits))
    if (!q.eval_mask(m)) return false;
  return true;
}

std::size_t size(const CircKb& c) {
  return size(c.theory()) + c.minimized().size() + c.fixed().size() + c.varying().size();
}

}  // namespace pkr
