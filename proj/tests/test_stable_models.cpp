#include <algorithm>
#include <random>

#include "doctest.h"
#include "pkr/logic_program.hpp"
#include "pkr/parser.hpp"
#include "pkr/reductions.hpp"

using namespace pkr;

namespace {

ProgramRule rule(const char* head, std::initializer_list<const char*> pos,
                 std::initializer_list<const char*> neg) {
  std::vector<Atom> p, n;
  for (const char* x : pos) p.emplace_back(x);
  for (const char* x : neg) n.emplace_back(x);
  return ProgramRule(Atom(head), std::move(p), std::move(n));
}

Interpretation interp(const Alphabet& a, std::initializer_list<const char*> names) {
  std::vector<Atom> atoms;
  for (const char* n : names) atoms.emplace_back(n);
  return Interpretation::of_atoms(a, atoms);
}

// Oracle: full enumeration of all interpretations.
std::vector<Interpretation> naive_stable_models(const LogicProgram& p) {
  std::vector<Interpretation> out;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << p.alphabet().size()); ++m) {
    const auto candidate = Interpretation::of_mask(p.alphabet(), m);
    if (is_stable(candidate, p)) out.push_back(candidate);
  }
  return out;
}

}  // namespace

TEST_CASE("reduct") {
  const LogicProgram p({rule("q", {}, {"p"})});
  const Alphabet& a = p.alphabet();
  CHECK(reduct(p, interp(a, {})) == LogicProgram(a, {rule("q", {}, {})}));
  CHECK(reduct(p, interp(a, {"p"})) == LogicProgram(a, {}));

  const LogicProgram p1 = kernel_program(1);
  const LogicProgram r1 = reduct(p1, interp(p1.alphabet(), {"r11"}));
  CHECK(r1 == LogicProgram(p1.alphabet(), {rule("a1", {"r11"}, {}), rule("r11", {}, {})}));
}

TEST_CASE("least_model") {
  CHECK(least_model(LogicProgram(std::vector<ProgramRule>{})).true_atoms().empty());

  const LogicProgram chain({rule("p", {}, {}), rule("q", {"p"}, {})});
  CHECK(least_model(chain) == interp(chain.alphabet(), {"p", "q"}));

  const LogicProgram p1 = kernel_program(1);
  CHECK(least_model(reduct(p1, interp(p1.alphabet(), {"r11"}))) ==
        interp(p1.alphabet(), {"r11", "a1"}));

  CHECK_THROWS_AS(least_model(LogicProgram({rule("q", {}, {"p"})})), contract_error);
}

TEST_CASE("is_stable") {
  const LogicProgram choice({rule("r", {}, {"s"}), rule("s", {}, {"r"})});
  const Alphabet& a = choice.alphabet();
  CHECK(is_stable(interp(a, {"r"}), choice));
  CHECK(is_stable(interp(a, {"s"}), choice));
  CHECK_FALSE(is_stable(interp(a, {"r", "s"}), choice));
  CHECK_FALSE(is_stable(interp(a, {}), choice));

  const LogicProgram paradox({rule("p", {}, {"p"})});
  CHECK_FALSE(is_stable(interp(paradox.alphabet(), {}), paradox));
  CHECK_FALSE(is_stable(interp(paradox.alphabet(), {"p"}), paradox));

  CHECK(is_stable(Interpretation(Alphabet()), LogicProgram(std::vector<ProgramRule>{})));
}

TEST_CASE("stable_models") {
  const LogicProgram choice({rule("r", {}, {"s"}), rule("s", {}, {"r"})});
  CHECK(stable_models(choice) == std::vector<Interpretation>{
                                     interp(choice.alphabet(), {"r"}),
                                     interp(choice.alphabet(), {"s"})});

  const LogicProgram mixed(
      {rule("p", {}, {"q"}), rule("q", {}, {"p"}), rule("p", {"q"}, {})});
  CHECK(stable_models(mixed) ==
        std::vector<Interpretation>{interp(mixed.alphabet(), {"p"})});

  // The n=1 kernel program: r11 forces a1 via the reduct, yet a1 true
  // deletes its only support, so only {s11} survives.
  const LogicProgram p1 = kernel_program(1);
  CHECK(stable_models(p1) ==
        std::vector<Interpretation>{interp(p1.alphabet(), {"s11"})});
  CHECK(stable_models(p1) == naive_stable_models(p1));
}

TEST_CASE("sm_entails") {
  const LogicProgram choice({rule("r", {}, {"s"}), rule("s", {}, {"r"})});
  CHECK(sm_entails(choice, parse_formula("r | s")));
  CHECK_FALSE(sm_entails(choice, parse_formula("r")));

  const LogicProgram p_only({rule("p", {}, {})});
  CHECK(sm_entails(p_only, parse_formula("p")));

  // The empty alphabet program has the empty stable model.
  CHECK(sm_entails(LogicProgram({rule("p", {}, {"p"})}), parse_formula("~p")));
}

TEST_CASE("stable models are classical models, minimal over their reducts") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 120; ++round) {
    const int n_atoms = 2 + static_cast<int>(rng() % 4);
    std::vector<Atom> atoms;
    for (int i = 0; i < n_atoms; ++i) atoms.emplace_back("v" + std::to_string(i + 1));
    std::vector<ProgramRule> rules;
    const int n_rules = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n_rules; ++i) {
      std::vector<Atom> pos, neg;
      for (int b = 0; b < 2; ++b) {
        if (rng() % 2) pos.push_back(atoms[rng() % n_atoms]);
        if (rng() % 2) neg.push_back(atoms[rng() % n_atoms]);
      }
      rules.emplace_back(atoms[rng() % n_atoms], std::move(pos), std::move(neg));
    }
    if (rng() % 3 == 0 && n_atoms >= 2) {
      rules.emplace_back(atoms[0], std::vector<Atom>{}, std::vector<Atom>{atoms[1]});
      rules.emplace_back(atoms[1], std::vector<Atom>{}, std::vector<Atom>{atoms[0]});
    }
    const LogicProgram p(Alphabet(atoms), rules);

    const auto stable = stable_models(p);
    CHECK(stable == naive_stable_models(p));
    for (const Interpretation& m : stable) {
      // Classical reading: positive body and negated negatives imply head.
      for (const ProgramRule& r : p.rules()) {
        bool body = true;
        for (const Atom& x : r.positive_body) body = body && m.contains(x);
        for (const Atom& x : r.negative_body) body = body && !m.contains(x);
        if (body) CHECK(m.contains(r.head));
      }
      // Minimal among classical models of its own reduct.
      const LogicProgram red = reduct(p, m);
      for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << n_atoms); ++sub) {
        if (sub == m.mask() || (sub & ~m.mask()) != 0) continue;
        bool classical = true;
        for (const ProgramRule& r : red.rules()) {
          bool body = true;
          for (const Atom& x : r.positive_body)
            body = body && ((sub >> p.alphabet().index(x)) & 1u);
          if (body && !((sub >> p.alphabet().index(r.head)) & 1u)) classical = false;
        }
        CHECK_FALSE(classical);
      }
    }

    // Adding a rule never shrinks the least model of a definite program.
    std::vector<ProgramRule> definite;
    for (const ProgramRule& r : p.rules()) definite.emplace_back(r.head, r.positive_body, std::vector<Atom>{});
    const LogicProgram base(p.alphabet(), definite);
    std::vector<ProgramRule> extended = definite;
    extended.emplace_back(atoms[rng() % n_atoms], std::vector<Atom>{}, std::vector<Atom>{});
    const LogicProgram bigger(p.alphabet(), extended);
    const std::uint32_t lm = least_model(base).mask();
    CHECK((lm & ~least_model(bigger).mask()) == 0);
  }
}

TEST_CASE("enumeration cap") {
  std::vector<ProgramRule> rules;
  for (int i = 0; i < 23; ++i)
    rules.push_back(ProgramRule(Atom("v" + std::to_string(i)), {}, {}));
  CHECK_THROWS_AS(stable_models(LogicProgram(rules)), capacity_error);
}
