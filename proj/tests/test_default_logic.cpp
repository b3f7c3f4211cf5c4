#include <algorithm>
#include <random>

#include "doctest.h"
#include "pkr/default_logic.hpp"
#include "pkr/parser.hpp"

using namespace pkr;

namespace {

DefaultRule rule(const char* pre, std::initializer_list<const char*> justs, const char* cons) {
  DefaultRule r;
  r.prerequisite = *pre ? parse_formula(pre) : Formula::True();
  for (const char* j : justs) r.justifications.push_back(parse_formula(j));
  r.consequent = parse_formula(cons);
  return r;
}

KnowledgeBase kb(std::initializer_list<const char*> fs) {
  std::vector<Formula> out;
  for (const char* f : fs) out.push_back(parse_formula(f));
  return KnowledgeBase(std::move(out));
}

std::vector<std::vector<int>> generating_sets(const DefaultTheory& dt) {
  std::vector<std::vector<int>> out;
  for (const Extension& e : extensions(dt)) out.push_back(e.generating);
  return out;
}

// Oracle: every subset of the default list, checked by the public
// fixpoint test.
std::vector<std::vector<int>> naive_extension_sets(const DefaultTheory& dt) {
  const int n = static_cast<int>(dt.defaults().size());
  std::vector<std::vector<int>> out;
  for (std::uint32_t gd = 0; gd < (std::uint32_t(1) << n); ++gd) {
    std::vector<int> indices;
    for (int i = 0; i < n; ++i)
      if ((gd >> i) & 1u) indices.push_back(i);
    if (reiter_check(dt, indices)) out.push_back(indices);
  }
  return out;
}

}  // namespace

TEST_CASE("reiter_check") {
  const DefaultTheory applied(kb({"a"}), {rule("", {"b"}, "b")});
  CHECK(reiter_check(applied, {0}));
  CHECK_FALSE(reiter_check(applied, {}));

  const DefaultTheory blocked(KnowledgeBase(), {rule("", {"b"}, "~b")});
  CHECK_FALSE(reiter_check(blocked, {}));
  CHECK_FALSE(reiter_check(blocked, {0}));

  // Groundedness: a consequent cannot justify its own prerequisite.
  const DefaultTheory circular(KnowledgeBase(), {rule("p", {"p"}, "p")});
  CHECK_FALSE(reiter_check(circular, {0}));
  CHECK(reiter_check(circular, {}));
}

TEST_CASE("extensions") {
  const DefaultTheory single(KnowledgeBase(), {rule("", {"~p"}, "~p")});
  auto exts = extensions(single);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].generating == std::vector<int>{0});
  CHECK(exts[0].base.formulas() == std::vector<Formula>{parse_formula("~p")});

  CHECK(extensions(DefaultTheory(KnowledgeBase(), {rule("", {"b"}, "~b")})).empty());

  const DefaultTheory pair(KnowledgeBase(), {rule("", {"p"}, "p"), rule("", {"~p"}, "~p")});
  exts = extensions(pair);
  REQUIRE(exts.size() == 2);
  CHECK(exts[0].generating == std::vector<int>{0});
  CHECK(exts[0].base.formulas() == std::vector<Formula>{parse_formula("p")});
  CHECK(exts[1].generating == std::vector<int>{1});
  CHECK(exts[1].base.formulas() == std::vector<Formula>{parse_formula("~p")});
}

TEST_CASE("credulous / skeptical / model checking") {
  const DefaultTheory pair(KnowledgeBase(), {rule("", {"p"}, "p"), rule("", {"~p"}, "~p")});
  CHECK(credulous_entails(pair, parse_formula("p")));
  CHECK_FALSE(skeptical_entails(pair, parse_formula("p")));
  CHECK(skeptical_entails(pair, parse_formula("p | ~p")));

  const DefaultTheory none(KnowledgeBase(), {rule("", {"b"}, "~b")});
  CHECK_FALSE(credulous_entails(none, Formula::True()));
  CHECK(skeptical_entails(none, Formula::False()));

  const DefaultTheory fact(kb({"a"}), {});
  CHECK(credulous_entails(fact, parse_formula("a")));

  const DefaultTheory neg(KnowledgeBase(), {rule("", {"~p"}, "~p")});
  const Alphabet p = neg.alphabet();
  CHECK(model_of_some_extension(Interpretation::of_mask(p, 0), neg));
  CHECK_FALSE(model_of_some_extension(Interpretation::of_mask(p, 1), neg));
  CHECK_FALSE(model_of_some_extension(Interpretation::of_mask(neg.alphabet(), 0), none));
}

TEST_CASE("inconsistent background") {
  const DefaultTheory dt(kb({"a", "~a"}), {rule("", {"b"}, "b")});
  auto exts = extensions(dt);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].generating.empty());
  CHECK(skeptical_entails(dt, Formula::False()));
  CHECK(credulous_entails(dt, Formula::False()));
}

TEST_CASE("justification-free defaults may force an inconsistent extension") {
  const DefaultTheory dt(KnowledgeBase(),
                         {rule("", {}, "p"), rule("", {}, "~p"), rule("", {"q"}, "q")});
  auto exts = extensions(dt);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].generating == std::vector<int>{0, 1});

  // A justification-free default with an unreachable prerequisite stays
  // out, and the remaining base is consistent.
  const DefaultTheory gated(KnowledgeBase(), {rule("p", {}, "q"), rule("", {}, "~q")});
  exts = extensions(gated);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].generating == std::vector<int>{1});
}

TEST_CASE("branch-and-prune search equals naive subset enumeration") {
  std::mt19937_64 rng(424242);
  const Alphabet a = Alphabet::of_names({"p", "q", "r"});
  const auto rand_formula = [&](auto&& self, int depth) -> Formula {
    if (depth == 0 || rng() % 3 == 0) return Formula::Var(a.at(rng() % a.size()));
    switch (rng() % 4) {
      case 0: return Formula::Not(self(self, depth - 1));
      case 1: return Formula::And(self(self, depth - 1), self(self, depth - 1));
      case 2: return Formula::Or(self(self, depth - 1), self(self, depth - 1));
      default: return Formula::Implies(self(self, depth - 1), self(self, depth - 1));
    }
  };
  for (int round = 0; round < 60; ++round) {
    std::vector<Formula> w;
    if (rng() % 2 == 0) w.push_back(rand_formula(rand_formula, 2));
    std::vector<DefaultRule> ds;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      DefaultRule d;
      if (rng() % 3 == 0) d.prerequisite = rand_formula(rand_formula, 2);
      d.consequent = rand_formula(rand_formula, 2);
      switch (rng() % 4) {
        case 0: break;  // no justification
        case 1: d.justifications = {d.consequent}; break;
        default: d.justifications = {rand_formula(rand_formula, 2)}; break;
      }
      // Sprinkle complementary normal pairs to exercise the pair pruning.
      if (rng() % 3 == 0) {
        const Formula g = rand_formula(rand_formula, 1);
        d = DefaultRule{Formula::True(), {g}, g};
        ds.push_back(d);
        ds.push_back(DefaultRule{Formula::True(), {negated(g)}, negated(g)});
        ++i;
        continue;
      }
      ds.push_back(d);
    }
    const DefaultTheory dt(KnowledgeBase(a, w), ds);
    CHECK(generating_sets(dt) == naive_extension_sets(dt));
  }
}

TEST_CASE("normal theories have extensions; extensions are incomparable") {
  std::mt19937_64 rng(5150);
  const Alphabet a = Alphabet::of_names({"p", "q"});
  const auto rand_formula = [&](auto&& self, int depth) -> Formula {
    if (depth == 0 || rng() % 3 == 0) return Formula::Var(a.at(rng() % a.size()));
    switch (rng() % 3) {
      case 0: return Formula::Not(self(self, depth - 1));
      case 1: return Formula::And(self(self, depth - 1), self(self, depth - 1));
      default: return Formula::Or(self(self, depth - 1), self(self, depth - 1));
    }
  };
  for (int round = 0; round < 80; ++round) {
    std::vector<DefaultRule> ds;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      const Formula g = rand_formula(rand_formula, 2);
      ds.push_back(DefaultRule{Formula::True(), {g}, g});
    }
    const DefaultTheory dt(KnowledgeBase(a, {}), ds);
    const auto exts = extensions(dt);
    CHECK(!exts.empty());
    for (const Extension& e1 : exts) {
      CHECK(reiter_check(dt, e1.generating));
      for (const Extension& e2 : exts) {
        if (e1.generating == e2.generating) continue;
        const Formula conj2 = conjunction_of(e2.base.formulas());
        CHECK_FALSE(entails(e1.base, conj2));
      }
    }
    // Skeptical consequence implies credulous consequence.
    const Formula q = rand_formula(rand_formula, 2);
    if (skeptical_entails(dt, q)) CHECK(credulous_entails(dt, q));
  }
}

TEST_CASE("search cap") {
  std::vector<DefaultRule> ds(25, rule("", {"p"}, "p"));
  CHECK_THROWS_AS(extensions(DefaultTheory(KnowledgeBase(), ds)), capacity_error);
}
