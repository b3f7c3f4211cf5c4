#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pkr/formula.hpp"

namespace pkr {

// A truth assignment over an alphabet, stored as the set of true atoms.
// Bit i of the mask corresponds to alphabet position i, so interpretations
// over an alphabet are canonically ordered by their mask read as a binary
// number. Equality compares true-atom sets, not alphabets.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(Alphabet a) : alphabet_(std::move(a)) {}

  static Interpretation of_mask(Alphabet a, std::uint32_t mask);
  // Throws eval_error when an atom is not in the alphabet.
  static Interpretation of_atoms(Alphabet a, const std::vector<Atom>& true_atoms);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t mask() const { return mask_; }

  bool contains(const Atom& a) const {
    const int i = alphabet_.index(a);
    return i >= 0 && (mask_ >> i) & 1u;
  }

  std::vector<Atom> true_atoms() const;

  // Same set over a different alphabet; every true atom must be present
  // in the target alphabet.
  Interpretation reinterpret(const Alphabet& target) const;

  friend bool operator==(const Interpretation& x, const Interpretation& y);
  friend bool operator!=(const Interpretation& x, const Interpretation& y) {
    return !(x == y);
  }

 private:
  Alphabet alphabet_;
  std::uint32_t mask_ = 0;
};

// "{a, c}" with atoms in alphabet order; "{}" for the empty assignment.
std::string to_string(const Interpretation& m);

}  // namespace pkr
