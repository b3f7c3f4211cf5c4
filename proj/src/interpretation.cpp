#include "pkr/interpretation.hpp"

#include <algorithm>

#include "pkr/errors.hpp"

namespace pkr {

Interpretation Interpretation::of_mask(Alphabet a, std::uint32_t mask) {
  Interpretation m(std::move(a));
  if (m.alphabet_.size() < 32 && (mask >> m.alphabet_.size()) != 0)
    throw contract_error("interpretation mask has bits outside the alphabet");
  m.mask_ = mask;
  return m;
}

Interpretation Interpretation::of_atoms(Alphabet a, const std::vector<Atom>& true_atoms) {
  Interpretation m(std::move(a));
  for (const Atom& atom : true_atoms) {
    const int i = m.alphabet_.index(atom);
    if (i < 0) throw eval_error("unknown atom '" + atom.name() + "'");
    m.mask_ |= 1u << i;
  }
  return m;
}

std::vector<Atom> Interpretation::true_atoms() const {
  std::vector<Atom> out;
  for (int i = 0; i < alphabet_.size(); ++i)
    if ((mask_ >> i) & 1u) out.push_back(alphabet_.at(i));
  return out;
}

Interpretation Interpretation::reinterpret(const Alphabet& target) const {
  return of_atoms(target, true_atoms());
}

bool operator==(const Interpretation& x, const Interpretation& y) {
  if (x.alphabet_ == y.alphabet_) return x.mask_ == y.mask_;
  std::vector<Atom> a = x.true_atoms();
  std::vector<Atom> b = y.true_atoms();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string to_string(const Interpretation& m) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : m.true_atoms()) {
    if (!first) out += ", ";
    out += a.name();
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace pkr
