#include <random>

#include "doctest.h"
#include "pkr/parser.hpp"
#include "pkr/revision.hpp"

using namespace pkr;

namespace {

KnowledgeBase kb(std::initializer_list<const char*> fs) {
  std::vector<Formula> out;
  for (const char* f : fs) out.push_back(parse_formula(f));
  return KnowledgeBase(std::move(out));
}

RevisionInstance example() {
  return RevisionInstance(kb({"a", "~a | b", "~b"}), parse_formula("a"));
}

}  // namespace

TEST_CASE("wka") {
  const RevisionInstance r = example();
  const auto subsets = wka(r);
  REQUIRE(subsets.size() == 2);
  CHECK(subsets[0].formulas() ==
        std::vector<Formula>{parse_formula("a"), parse_formula("~a | b")});
  CHECK(subsets[1].formulas() ==
        std::vector<Formula>{parse_formula("a"), parse_formula("~b")});

  const RevisionInstance fresh(KnowledgeBase(), parse_formula("p"));
  const auto single = wka(fresh);
  REQUIRE(single.size() == 1);
  CHECK(single[0].formulas() == std::vector<Formula>{parse_formula("p")});

  CHECK(wka(RevisionInstance(kb({"q"}), parse_formula("p & ~p"))).empty());

  // Every member contains A, is consistent, and extending it with any
  // left-out formula breaks consistency.
  for (const KnowledgeBase& subset : subsets) {
    CHECK(is_consistent(subset));
    CHECK(std::count(subset.formulas().begin(), subset.formulas().end(),
                     r.new_formula()) == 1);
    for (const Formula& f : r.members().formulas()) {
      if (std::count(subset.formulas().begin(), subset.formulas().end(), f)) continue;
      CHECK_FALSE(is_consistent(subset.with_formula(f)));
    }
  }
}

TEST_CASE("sbr") {
  const RevisionInstance r = example();
  CHECK(sbr_entails(r, parse_formula("a")));
  CHECK_FALSE(sbr_entails(r, parse_formula("b")));
  CHECK(sbr_entails(r, Formula::True()));

  const RevisionInstance contradiction(kb({"q"}), parse_formula("p & ~p"));
  CHECK(sbr_entails(contradiction, Formula::False()));

  const Alphabet& a = r.alphabet();
  CHECK(sbr_model_check(Interpretation::of_atoms(a, {Atom("a"), Atom("b")}), r));
  CHECK_FALSE(sbr_model_check(Interpretation::of_atoms(a, {}), r));
  CHECK_FALSE(sbr_model_check(Interpretation::of_atoms(contradiction.alphabet(), {}),
                              contradiction));
}

TEST_CASE("widtio") {
  const RevisionInstance r = example();
  CHECK(widtio_base(r).formulas() == std::vector<Formula>{parse_formula("a")});

  // K consistent with A keeps everything.
  const RevisionInstance easy(kb({"p | q"}), parse_formula("~q"));
  CHECK(widtio_base(easy).formulas() ==
        std::vector<Formula>{parse_formula("p | q"), parse_formula("~q")});

  const RevisionInstance contradiction(kb({"q"}), parse_formula("p & ~p"));
  CHECK(widtio_base(contradiction).formulas().empty());

  CHECK(size(widtio_base(r)) <= size(r.members()));

  CHECK(widtio_entails(r, parse_formula("a")));
  CHECK_FALSE(widtio_entails(r, parse_formula("~b")));
  CHECK(widtio_entails(r, parse_formula("b | ~b")));
  // The inconsistent-A split: widtio keeps only tautologies while sbr is
  // vacuously total.
  CHECK_FALSE(widtio_entails(contradiction, parse_formula("q")));
  CHECK(sbr_entails(contradiction, parse_formula("q")));

  const Alphabet& a = r.alphabet();
  CHECK(widtio_model_check(Interpretation::of_atoms(a, {Atom("a")}), r));
  CHECK_FALSE(widtio_model_check(Interpretation::of_atoms(a, {}), r));
  CHECK(widtio_model_check(Interpretation::of_atoms(contradiction.alphabet(), {}),
                           contradiction));
}

TEST_CASE("duplicate members survive as a multiset; A is not re-added") {
  const RevisionInstance dup(kb({"p", "p"}), parse_formula("q"));
  const auto subsets = wka(dup);
  REQUIRE(subsets.size() == 1);
  CHECK(subsets[0].formulas() ==
        std::vector<Formula>{parse_formula("p"), parse_formula("p"), parse_formula("q")});

  const RevisionInstance present(kb({"a", "~b"}), parse_formula("a"));
  CHECK(present.members().member_count() == 2);
  CHECK(widtio_base(present).formulas() ==
        std::vector<Formula>{parse_formula("a"), parse_formula("~b")});
}

TEST_CASE("random instances: widtio implies sbr, duality, definitional model check") {
  std::mt19937_64 rng(8086);
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
    std::vector<Formula> fs;
    for (std::size_t i = 0, n = rng() % 4; i < n; ++i)
      fs.push_back(rand_formula(rand_formula, 2));
    const RevisionInstance r(KnowledgeBase(a, fs), rand_formula(rand_formula, 2));
    const Formula q = rand_formula(rand_formula, 2);
    if (widtio_entails(r, q)) CHECK(sbr_entails(r, q));

    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      const auto m = Interpretation::of_mask(a, mask);
      CHECK(sbr_model_check(m, r) ==
            !sbr_entails(r, Formula::Not(conjunction_of_literals(m, a))));
      const KnowledgeBase wbase = widtio_base(r);
      bool direct = true;
      for (const Formula& f : wbase.formulas()) direct = direct && eval(f, m);
      CHECK(widtio_model_check(m, r) == direct);
    }
  }
}

TEST_CASE("subset enumeration cap") {
  std::vector<Formula> many;
  for (int i = 0; i < 17; ++i) many.push_back(parse_formula("p" + std::to_string(i)));
  CHECK_THROWS_AS(wka(RevisionInstance(KnowledgeBase(many), parse_formula("q"))),
                  capacity_error);
}
