#pragma once

#include <vector>

#include "pkr/semantics.hpp"

namespace pkr {

// A base K being revised with A. K is a multiset: syntactically equal
// members stay distinct. When A already occurs in K it is not added again.
class RevisionInstance {
 public:
  RevisionInstance(KnowledgeBase base, Formula new_formula);

  const KnowledgeBase& base() const { return base_; }
  const Formula& new_formula() const { return new_formula_; }
  const Alphabet& alphabet() const { return members_.alphabet(); }

  // K plus A (unless already present); subsets are drawn from this list.
  const KnowledgeBase& members() const { return members_; }
  int new_formula_index() const { return new_index_; }

  friend bool operator==(const RevisionInstance& a, const RevisionInstance& b) {
    return a.base_ == b.base_ && a.new_formula_ == b.new_formula_;
  }
  friend bool operator!=(const RevisionInstance& a, const RevisionInstance& b) {
    return !(a == b);
  }

 private:
  KnowledgeBase base_;
  Formula new_formula_;
  KnowledgeBase members_;
  int new_index_;
};

// All maximal consistent subsets of K + {A} that contain A, ordered by
// their member bitmask ascending. Empty exactly when A is inconsistent.
std::vector<KnowledgeBase> wka(const RevisionInstance& r, const Limits& limits = {});

// Every maximal subset entails q; vacuously true when there is none.
bool sbr_entails(const RevisionInstance& r, const Formula& q, const Limits& limits = {});

// Some maximal subset is satisfied by m.
bool sbr_model_check(const Interpretation& m, const RevisionInstance& r,
                     const Limits& limits = {});

// Members common to all maximal subsets; empty when there is none.
KnowledgeBase widtio_base(const RevisionInstance& r, const Limits& limits = {});

bool widtio_entails(const RevisionInstance& r, const Formula& q, const Limits& limits = {});

bool widtio_model_check(const Interpretation& m, const RevisionInstance& r,
                        const Limits& limits = {});

std::size_t size(const RevisionInstance& r);

}  // namespace pkr
