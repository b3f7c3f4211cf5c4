#include <random>

#include "doctest.h"
#include "pkr/io.hpp"
#include "pkr/oracles.hpp"
#include "pkr/parser.hpp"
#include "pkr/reductions.hpp"

using namespace pkr;

namespace {

Interpretation interp(const Alphabet& a, std::initializer_list<const char*> names) {
  std::vector<Atom> atoms;
  for (const char* n : names) atoms.emplace_back(n);
  return Interpretation::of_atoms(a, atoms);
}

DefaultRule pfn(const char* gamma) {
  const Formula g = parse_formula(gamma);
  return DefaultRule{Formula::True(), {g}, g};
}

QbfEA make_qbf(std::vector<Atom> x, std::vector<Atom> y, const std::vector<Clause>& matrix) {
  return QbfEA::from(QbfInstance(std::move(x), std::move(y), matrix));
}

std::vector<Atom> atoms(std::initializer_list<const char*> names) {
  std::vector<Atom> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

}  // namespace

TEST_CASE("clause_universe") {
  const Alphabet v3 = Alphabet::of_names({"x1", "x2", "x3"});
  const auto u3 = clause_universe(v3);
  CHECK(u3.size() == 8);
  CHECK(u3.front() == Clause({{Atom("x1"), false}, {Atom("x2"), false}, {Atom("x3"), false}}));

  const Alphabet v4 = Alphabet::of_names({"x1", "x2", "x3", "x4"});
  CHECK(clause_universe(v4).size() == 32);
  for (const Clause& c : clause_universe(v4)) {
    CHECK(c.atoms().size() == 3);
    CHECK_FALSE(c.is_tautology());
  }
  CHECK_THROWS_AS(clause_universe(Alphabet::of_names({"a", "b"})), contract_error);
}

TEST_CASE("kernel_program counts") {
  for (int n = 1; n <= 6; ++n) {
    const LogicProgram p = kernel_program(n);
    CHECK(p.alphabet().size() == 2 * n * n + n);
    CHECK(p.rules().size() == static_cast<std::size_t>(3 * n * n));
  }
}

TEST_CASE("kernel_query") {
  const DirectedGraph two_cycle(2, {{1, 2}, {2, 1}});
  CHECK(kernel_query(two_cycle) == parse_formula("~r12 | ~r21 | r11 | r22"));
  CHECK(kernel_query(DirectedGraph(1, {{1, 1}})) == parse_formula("~r11"));
  CHECK(kernel_query(DirectedGraph(1, {})) == parse_formula("r11"));
}

TEST_CASE("kernel pipeline matches the oracle on small graphs") {
  // n = 1 and n = 2 exhaustively; three labeled vertices are acceptance
  // territory.
  for (int n = 1; n <= 2; ++n) {
    const LogicProgram p = kernel_program(n);
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) all_edges.emplace_back(i, j);
    for (std::uint32_t pick = 0; pick < (1u << all_edges.size()); ++pick) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < all_edges.size(); ++e)
        if ((pick >> e) & 1u) edges.push_back(all_edges[e]);
      const DirectedGraph g(n, edges);
      CHECK(has_kernel(g).exists == !sm_entails(p, kernel_query(g)));
    }
  }
}

TEST_CASE("etherington") {
  const DefaultTheory micro(KnowledgeBase(), {pfn("~p")});
  const EtheringtonResult out = etherington(micro);

  CHECK(out.target.theory().formulas() ==
        std::vector<Formula>{parse_formula("a1 <-> p")});
  CHECK(out.target.minimized() == atoms({"a1"}));
  CHECK(out.target.varying() == atoms({"p"}));
  CHECK(out.target.fixed().empty());

  // The circuit passes p through and wires a1 straight to p.
  CHECK(out.model_map.gates.empty());
  REQUIRE(out.model_map.outputs.size() == 2);
  CHECK(out.model_map.outputs[1].first == Atom("a1"));
  CHECK(out.model_map.outputs[1].second == BooleanCircuit::Ref{true, 0});
  const Alphabet z = micro.alphabet();
  CHECK(eval_circuit(out.model_map, interp(z, {"p"})) ==
        interp(out.target.alphabet(), {"p", "a1"}));

  // Model preservation on the micro instance, by hand.
  CHECK(model_of_some_extension(interp(z, {}), micro));
  CHECK(circ_model_check(eval_circuit(out.model_map, interp(z, {})), out.target));
  CHECK_FALSE(model_of_some_extension(interp(z, {"p"}), micro));
  CHECK_FALSE(circ_model_check(eval_circuit(out.model_map, interp(z, {"p"})), out.target));

  // No defaults: everything is varying and nothing minimized, so every
  // model of W stays.
  const DefaultTheory empty_d(KnowledgeBase({parse_formula("p | q")}), {});
  const EtheringtonResult plain = etherington(empty_d);
  CHECK(plain.target.minimized().empty());
  CHECK(plain.target.theory() == empty_d.background());

  CHECK_THROWS_AS(etherington(DefaultTheory(
                      KnowledgeBase(), {DefaultRule{parse_formula("p"), {}, parse_formula("q")}})),
                  contract_error);
  // Fresh-name collision with a theory letter.
  CHECK_THROWS_AS(etherington(DefaultTheory(KnowledgeBase({parse_formula("a1")}), {pfn("~a1")})),
                  contract_error);
}

TEST_CASE("circ_to_default") {
  const KnowledgeBase t({parse_formula("p | q")});
  const DefaultTheory dt = circ_to_default(t);
  REQUIRE(dt.defaults().size() == 2);
  CHECK(dt.defaults()[0] == pfn("~p"));
  CHECK(dt.defaults()[1] == pfn("~q"));
  CHECK(skeptical_entails(dt, parse_formula("~(p & q)")));
  CHECK(circ_entails(CircKb(t, t.alphabet().atoms()), parse_formula("~(p & q)")));

  const KnowledgeBase empty(Alphabet::of_names({"p"}), {});
  CHECK(skeptical_entails(circ_to_default(empty), parse_formula("~p")));

  const KnowledgeBase fact({parse_formula("p")});
  const auto exts = extensions(circ_to_default(fact));
  REQUIRE(exts.size() == 1);
  CHECK(entails(exts[0].base, parse_formula("p")));
}

TEST_CASE("qbf reduction shapes") {
  const auto x12 = atoms({"x1", "x2"});
  const auto y1 = atoms({"y1"});
  const QbfEA q = make_qbf(x12, y1, {});

  const auto mc = qbf_to_skeptical_mc(q);
  CHECK(mc.theory.defaults().size() == 2 * 8 + 2 * 2 + 1);
  CHECK(mc.theory.background().formulas().empty());
  CHECK(mc.model.true_atoms().empty());

  const auto inf = qbf_to_credulous_inf(q);
  CHECK(inf.theory.defaults().size() == 2 * 8 + 2 * 2 + 1);

  // Query for a single-clause matrix: c1 with every other c negated, then w.
  const Alphabet vars = q.variables();
  const auto universe = clause_universe(vars);
  const auto single = qbf_to_credulous_inf(make_qbf(x12, y1, {universe.front()}));
  CHECK(single.query ==
        parse_formula("c1 & ~c2 & ~c3 & ~c4 & ~c5 & ~c6 & ~c7 & ~c8 & w"));

  // The matrix's model only mentions c atoms.
  const auto full = qbf_to_skeptical_mc(make_qbf(x12, y1, universe));
  for (const Atom& a : full.model.true_atoms()) CHECK(a.name()[0] == 'c');

  // Clauses outside the universe (too few distinct variables) are rejected.
  CHECK_THROWS_AS(make_qbf(x12, y1, {Clause({{Atom("x1"), true}, {Atom("x2"), true}})}),
                  contract_error);
}

TEST_CASE("qbf reductions agree with the oracle on three-variable instances") {
  std::mt19937_64 rng(271828);
  const std::vector<Atom> vars = atoms({"v1", "v2", "v3"});
  for (int split = 0; split <= 3; ++split) {
    const std::vector<Atom> x(vars.begin(), vars.begin() + split);
    const std::vector<Atom> y(vars.begin() + split, vars.end());
    const auto universe = clause_universe(Alphabet(vars));
    for (int round = 0; round < 4; ++round) {
      std::vector<Clause> matrix;
      if (round == 1) matrix = universe;
      if (round >= 2)
        for (const Clause& c : universe)
          if (rng() % 2) matrix.push_back(c);
      const QbfEA q = make_qbf(x, y, matrix);
      const bool valid = qbf_valid(q);

      const auto mc = qbf_to_skeptical_mc(q);
      CHECK(model_of_some_extension(mc.model, mc.theory) == valid);

      const auto inf = qbf_to_credulous_inf(q);
      CHECK(credulous_entails(inf.theory, inf.query) == valid);
    }
  }
}

TEST_CASE("widtio_to_pl") {
  const RevisionInstance r(KnowledgeBase({parse_formula("a"), parse_formula("~a | b"),
                                          parse_formula("~b")}),
                           parse_formula("a"));
  CHECK(widtio_to_pl(r) == widtio_base(r));
  CHECK(size(widtio_to_pl(r)) <= size(r.members()));
}

TEST_CASE("reduction_size_report") {
  const auto kernel = reduction_size_report("kernel", 1, 3);
  REQUIRE(kernel.size() == 3);
  CHECK(kernel[0].columns[0] == std::pair<std::string, long long>{"atoms", 3});
  CHECK(kernel[1].columns[0] == std::pair<std::string, long long>{"atoms", 10});
  CHECK(kernel[2].columns[0] == std::pair<std::string, long long>{"atoms", 21});

  const auto clauses = reduction_size_report("clause-universe", 3, 6);
  CHECK(clauses[0].columns[0].second == 8);
  CHECK(clauses[1].columns[0].second == 32);
  CHECK(clauses[2].columns[0].second == 80);
  CHECK(clauses[3].columns[0].second == 160);

  const auto qbf = reduction_size_report("qbf-skeptical-mc", 3, 3);
  CHECK(qbf[0].columns[0].second == 2 * 8 + 2 * 1 + 1);

  CHECK_THROWS_AS(reduction_size_report("nonesuch", 1, 2), contract_error);
}
