#pragma once

#include <vector>

#include "pkr/semantics.hpp"

namespace pkr {

// A theory with its letters partitioned into minimized (P), fixed (Q) and
// varying (Z) sets. Alphabet atoms left out of all three default to fixed.
class CircKb {
 public:
  CircKb(KnowledgeBase theory, std::vector<Atom> minimized,
         std::vector<Atom> fixed = {}, std::vector<Atom> varying = {});

  const KnowledgeBase& theory() const { return theory_; }
  const Alphabet& alphabet() const { return theory_.alphabet(); }
  const std::vector<Atom>& minimized() const { return minimized_; }
  const std::vector<Atom>& fixed() const { return fixed_; }
  const std::vector<Atom>& varying() const { return varying_; }

  std::uint32_t minimized_mask() const { return p_mask_; }
  std::uint32_t fixed_mask() const { return q_mask_; }

 private:
  KnowledgeBase theory_;
  std::vector<Atom> minimized_, fixed_, varying_;
  std::uint32_t p_mask_ = 0, q_mask_ = 0;
};

// The preference order on models that selects circumscription's models:
// m1 is preferred to m2 when both agree on the fixed letters and m1's
// minimized letters are a strict subset of m2's. Varying letters are
// unconstrained.
bool circ_preferred(const Interpretation& m1, const Interpretation& m2, const CircKb& c);

// Models of the theory that no other model of the theory is preferred to,
// in ascending mask order.
std::vector<Interpretation> circ_models(const CircKb& c, const Limits& limits = {});

bool circ_model_check(const Interpretation& m, const CircKb& c, const Limits& limits = {});

bool circ_entails(const CircKb& c, const Formula& phi, const Limits& limits = {});

std::size_t size(const CircKb& c);

}  // namespace pkr
