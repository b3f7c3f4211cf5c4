#include "pkr/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pkr/errors.hpp"
#include "pkr/parser.hpp"

namespace pkr {

namespace {

struct Line {
  std::string text;
  int number;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(const std::string& text, char comment) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find(comment);
    if (hash != std::string::npos) raw.erase(hash);
    const std::string t = trim(raw);
    if (!t.empty()) out.push_back({t, number});
  }
  return out;
}

bool take_header(const Line& line, const std::string& key, std::string& rest) {
  if (line.text.rfind(key, 0) != 0) return false;
  rest = trim(line.text.substr(key.size()));
  return true;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<Atom> parse_atom_names(const std::string& s, int line) {
  std::vector<Atom> out;
  for (const std::string& w : split_words(s)) {
    try {
      out.emplace_back(w);
    } catch (const contract_error& e) {
      throw parse_error(e.what(), line, 1);
    }
  }
  return out;
}

std::string join_atom_names(const std::vector<Atom>& atoms) {
  std::string out;
  for (const Atom& a : atoms) {
    if (!out.empty()) out += ' ';
    out += a.name();
  }
  return out;
}

struct KbSections {
  Alphabet alphabet;
  std::vector<Line> body;
};

KbSections split_kb_header(const std::vector<Line>& lines) {
  KbSections out;
  std::vector<Atom> declared;
  bool seen_body = false;
  for (const Line& line : lines) {
    std::string rest;
    if (!seen_body && take_header(line, "atoms:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      declared.insert(declared.end(), atoms.begin(), atoms.end());
    } else {
      seen_body = true;
      out.body.push_back(line);
    }
  }
  try {
    out.alphabet = Alphabet(declared);
  } catch (const contract_error& e) {
    throw parse_error(e.what(), lines.empty() ? 1 : lines.front().number, 1);
  }
  return out;
}

}  // namespace

KnowledgeBase parse_kb_text(const std::string& text) {
  const KbSections s = split_kb_header(content_lines(text, '#'));
  std::vector<Formula> formulas;
  for (const Line& line : s.body) formulas.push_back(parse_formula(line.text, line.number));
  return KnowledgeBase(s.alphabet, std::move(formulas));
}

std::string emit_kb_text(const KnowledgeBase& kb) {
  std::string out = "atoms: " + join_atom_names(kb.alphabet().atoms()) + "\n";
  for (const Formula& f : kb.formulas()) out += to_string(f) + "\n";
  return out;
}

CircKb parse_circ_text(const std::string& text) {
  std::vector<Atom> declared, minimized, fixed, varying;
  std::vector<Line> body;
  for (const Line& line : content_lines(text, '#')) {
    std::string rest;
    if (take_header(line, "atoms:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      declared.insert(declared.end(), atoms.begin(), atoms.end());
    } else if (take_header(line, "minimize:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      minimized.insert(minimized.end(), atoms.begin(), atoms.end());
    } else if (take_header(line, "fixed:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      fixed.insert(fixed.end(), atoms.begin(), atoms.end());
    } else if (take_header(line, "vary:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      varying.insert(varying.end(), atoms.begin(), atoms.end());
    } else {
      body.push_back(line);
    }
  }
  std::vector<Formula> formulas;
  for (const Line& line : body) formulas.push_back(parse_formula(line.text, line.number));
  try {
    return CircKb(KnowledgeBase(Alphabet(declared), std::move(formulas)), std::move(minimized),
                  std::move(fixed), std::move(varying));
  } catch (const contract_error& e) {
    throw parse_error(e.what(), 1, 1);
  }
}

std::string emit_circ_text(const CircKb& c) {
  std::string out = "atoms: " + join_atom_names(c.alphabet().atoms()) + "\n";
  out += "minimize: " + join_atom_names(c.minimized()) + "\n";
  out += "fixed: " + join_atom_names(c.fixed()) + "\n";
  out += "vary: " + join_atom_names(c.varying()) + "\n";
  for (const Formula& f : c.theory().formulas()) out += to_string(f) + "\n";
  return out;
}

namespace {

DefaultRule parse_default_rule(const Line& line) {
  const std::size_t colon = line.text.find(':');
  if (colon == std::string::npos)
    throw parse_error("default rule needs 'pre : justifications / consequent'", line.number, 1);
  const std::size_t slash = line.text.find('/', colon);
  if (slash == std::string::npos)
    throw parse_error("default rule needs a '/' before the consequent", line.number, 1);

  DefaultRule rule;
  const std::string pre = trim(line.text.substr(0, colon));
  rule.prerequisite = pre.empty() ? Formula::True() : parse_formula(pre, line.number);

  const std::string justs = trim(line.text.substr(colon + 1, slash - colon - 1));
  if (!justs.empty()) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = justs.find(',', start);
      const std::string piece =
          trim(comma == std::string::npos ? justs.substr(start) : justs.substr(start, comma - start));
      if (piece.empty())
        throw parse_error("empty justification in default rule", line.number, 1);
      rule.justifications.push_back(parse_formula(piece, line.number));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  rule.consequent = parse_formula(trim(line.text.substr(slash + 1)), line.number);
  return rule;
}

std::string emit_default_rule(const DefaultRule& r) {
  std::string out;
  if (r.prerequisite != Formula::True()) out += to_string(r.prerequisite) + " ";
  out += ":";
  for (std::size_t i = 0; i < r.justifications.size(); ++i)
    out += (i == 0 ? " " : " , ") + to_string(r.justifications[i]);
  out += " / " + to_string(r.consequent);
  return out;
}

}  // namespace

DefaultTheory parse_default_text(const std::string& text) {
  const auto lines = content_lines(text, '#');
  std::vector<Atom> declared;
  std::vector<Formula> background;
  std::vector<DefaultRule> defaults;
  enum class Section { Head, W, D } section = Section::Head;
  for (const Line& line : lines) {
    std::string rest;
    if (section == Section::Head && take_header(line, "atoms:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      declared.insert(declared.end(), atoms.begin(), atoms.end());
      continue;
    }
    if (line.text == "W:") { section = Section::W; continue; }
    if (line.text == "D:") { section = Section::D; continue; }
    switch (section) {
      case Section::Head:
        throw parse_error("expected 'W:' before theory content", line.number, 1);
      case Section::W:
        background.push_back(parse_formula(line.text, line.number));
        break;
      case Section::D:
        defaults.push_back(parse_default_rule(line));
        break;
    }
  }
  if (section == Section::Head)
    throw parse_error("default theory file needs 'W:' and 'D:' sections",
                      lines.empty() ? 1 : lines.back().number, 1);
  return DefaultTheory(KnowledgeBase(Alphabet(declared), std::move(background)),
                       std::move(defaults));
}

std::string emit_default_text(const DefaultTheory& dt) {
  std::string out = "atoms: " + join_atom_names(dt.alphabet().atoms()) + "\n";
  out += "W:\n";
  for (const Formula& f : dt.background().formulas()) out += to_string(f) + "\n";
  out += "D:\n";
  for (const DefaultRule& r : dt.defaults()) out += emit_default_rule(r) + "\n";
  return out;
}

namespace {

Atom parse_program_atom(const std::string& s, int line) {
  try {
    return Atom(s);
  } catch (const contract_error& e) {
    throw parse_error(e.what(), line, 1);
  }
}

}  // namespace

LogicProgram parse_program_text(const std::string& text) {
  std::vector<ProgramRule> rules;
  for (const Line& line : content_lines(text, '%')) {
    std::string t = line.text;
    if (t.empty() || t.back() != '.')
      throw parse_error("program rule must end with '.'", line.number,
                        static_cast<int>(t.size()));
    t.pop_back();
    const std::size_t arrow = t.find(":-");
    const std::string head = trim(arrow == std::string::npos ? t : t.substr(0, arrow));
    if (head.empty()) throw parse_error("program rule needs a head atom", line.number, 1);
    std::vector<Atom> positive, negative;
    if (arrow != std::string::npos) {
      const std::string body = t.substr(arrow + 2);
      std::size_t start = 0;
      for (;;) {
        const std::size_t comma = body.find(',', start);
        std::string piece =
            trim(comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start));
        if (piece.empty())
          throw parse_error("empty literal in rule body", line.number, 1);
        if (piece.rfind("not ", 0) == 0)
          negative.push_back(parse_program_atom(trim(piece.substr(4)), line.number));
        else
          positive.push_back(parse_program_atom(piece, line.number));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    rules.emplace_back(parse_program_atom(head, line.number), std::move(positive),
                       std::move(negative));
  }
  return LogicProgram(std::move(rules));
}

std::string emit_program_text(const LogicProgram& p) {
  std::string out;
  for (const ProgramRule& r : p.rules()) {
    out += r.head.name();
    if (!r.positive_body.empty() || !r.negative_body.empty()) {
      out += " :- ";
      bool first = true;
      for (const Atom& a : r.positive_body) {
        if (!first) out += ", ";
        out += a.name();
        first = false;
      }
      for (const Atom& a : r.negative_body) {
        if (!first) out += ", ";
        out += "not " + a.name();
        first = false;
      }
    }
    out += ".\n";
  }
  return out;
}

RevisionInstance parse_revision_text(const std::string& text) {
  const auto lines = content_lines(text, '#');
  std::vector<Atom> declared;
  std::vector<Formula> base;
  std::vector<Formula> added;
  enum class Section { Head, K, A } section = Section::Head;
  for (const Line& line : lines) {
    std::string rest;
    if (section == Section::Head && take_header(line, "atoms:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      declared.insert(declared.end(), atoms.begin(), atoms.end());
      continue;
    }
    if (line.text == "K:") { section = Section::K; continue; }
    if (line.text == "A:") { section = Section::A; continue; }
    switch (section) {
      case Section::Head:
        throw parse_error("expected 'K:' before revision content", line.number, 1);
      case Section::K:
        base.push_back(parse_formula(line.text, line.number));
        break;
      case Section::A:
        added.push_back(parse_formula(line.text, line.number));
        break;
    }
  }
  if (added.size() != 1)
    throw parse_error("revision file needs exactly one formula in its 'A:' section",
                      lines.empty() ? 1 : lines.back().number, 1);
  return RevisionInstance(KnowledgeBase(Alphabet(declared), std::move(base)), added[0]);
}

std::string emit_revision_text(const RevisionInstance& r) {
  std::string out = "atoms: " + join_atom_names(r.alphabet().atoms()) + "\n";
  out += "K:\n";
  for (const Formula& f : r.base().formulas()) out += to_string(f) + "\n";
  out += "A:\n" + to_string(r.new_formula()) + "\n";
  return out;
}

QbfInstance parse_qbf_text(const std::string& text) {
  std::vector<Atom> existential, universal;
  std::vector<Clause> clauses;
  for (const Line& line : content_lines(text, '#')) {
    std::string rest;
    if (take_header(line, "exists:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      existential.insert(existential.end(), atoms.begin(), atoms.end());
      continue;
    }
    if (take_header(line, "forall:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      universal.insert(universal.end(), atoms.begin(), atoms.end());
      continue;
    }
    std::vector<Literal> lits;
    for (const std::string& w : split_words(line.text)) {
      const bool positive = w.empty() || w[0] != '-';
      const std::string name = positive ? w : w.substr(1);
      lits.push_back({parse_program_atom(name, line.number), positive});
    }
    clauses.emplace_back(std::move(lits));
  }
  try {
    return QbfInstance(std::move(existential), std::move(universal), std::move(clauses));
  } catch (const contract_error& e) {
    throw parse_error(e.what(), 1, 1);
  }
}

std::string emit_qbf_text(const QbfInstance& q) {
  std::string out = "exists: " + join_atom_names(q.existential()) + "\n";
  out += "forall: " + join_atom_names(q.universal()) + "\n";
  for (const Clause& c : q.clauses()) {
    std::string line;
    for (const Literal& l : c.literals()) {
      if (!line.empty()) line += ' ';
      if (!l.positive) line += '-';
      line += l.atom.name();
    }
    out += line + "\n";
  }
  return out;
}

DirectedGraph parse_graph_text(const std::string& text) {
  const auto lines = content_lines(text, '#');
  if (lines.empty()) throw parse_error("graph file needs a vertex count line", 1, 1);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(lines[0].text, &used);
    if (used != lines[0].text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw parse_error("graph file must start with the vertex count", lines[0].number, 1);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i].text);
    int a = 0, b = 0;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
      throw parse_error("edge lines are 'i j'", lines[i].number, 1);
    edges.emplace_back(a, b);
  }
  try {
    return DirectedGraph(n, std::move(edges));
  } catch (const contract_error& e) {
    throw parse_error(e.what(), lines[0].number, 1);
  }
}

std::string emit_graph_text(const DirectedGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const auto& [i, j] : g.edges())
    out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

namespace {

BooleanCircuit::Ref parse_circuit_ref(const std::string& token,
                                      const std::map<std::string, int>& gate_index,
                                      const Alphabet& inputs, int line) {
  if (token.rfind("in(", 0) == 0 && token.back() == ')') {
    const std::string name = token.substr(3, token.size() - 4);
    const int i = inputs.index(parse_program_atom(name, line));
    if (i < 0) throw parse_error("undeclared input '" + name + "'", line, 1);
    return {true, i};
  }
  const auto it = gate_index.find(token);
  if (it == gate_index.end())
    throw parse_error("unknown gate '" + token + "'", line, 1);
  return {false, it->second};
}

}  // namespace

BooleanCircuit parse_circuit_text(const std::string& text) {
  BooleanCircuit c;
  std::map<std::string, int> gate_index;
  bool have_inputs = false;
  for (const Line& line : content_lines(text, '#')) {
    std::string rest;
    if (take_header(line, "inputs:", rest)) {
      c.inputs = Alphabet(parse_atom_names(rest, line.number));
      have_inputs = true;
      continue;
    }
    if (!have_inputs)
      throw parse_error("circuit file must declare 'inputs:' first", line.number, 1);
    if (take_header(line, "outputs:", rest)) {
      for (const std::string& w : split_words(rest)) {
        const std::size_t eq = w.find('=');
        if (eq == std::string::npos)
          throw parse_error("outputs are 'atom=ref'", line.number, 1);
        c.outputs.emplace_back(
            parse_program_atom(w.substr(0, eq), line.number),
            parse_circuit_ref(w.substr(eq + 1), gate_index, c.inputs, line.number));
      }
      continue;
    }
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos)
      throw parse_error("gate lines are 'name = OP args'", line.number, 1);
    const std::string name = trim(line.text.substr(0, eq));
    if (gate_index.count(name))
      throw parse_error("gate '" + name + "' defined twice", line.number, 1);
    const auto words = split_words(line.text.substr(eq + 1));
    if (words.empty()) throw parse_error("gate needs an operation", line.number, 1);
    BooleanCircuit::Gate gate;
    if (words[0] == "AND") gate.op = BooleanCircuit::GateOp::And;
    else if (words[0] == "OR") gate.op = BooleanCircuit::GateOp::Or;
    else if (words[0] == "NOT") gate.op = BooleanCircuit::GateOp::Not;
    else if (words[0] == "CONST") gate.op = BooleanCircuit::GateOp::Const;
    else throw parse_error("unknown gate operation '" + words[0] + "'", line.number, 1);
    if (gate.op == BooleanCircuit::GateOp::Const) {
      if (words.size() != 2 || (words[1] != "true" && words[1] != "false"))
        throw parse_error("CONST takes true or false", line.number, 1);
      gate.const_value = words[1] == "true";
    } else {
      for (std::size_t i = 1; i < words.size(); ++i)
        gate.args.push_back(parse_circuit_ref(words[i], gate_index, c.inputs, line.number));
    }
    gate_index.emplace(name, static_cast<int>(c.gates.size()));
    c.gates.push_back(std::move(gate));
  }
  try {
    validate(c);
  } catch (const contract_error& e) {
    throw parse_error(e.what(), 1, 1);
  }
  return c;
}

std::string emit_circuit_text(const BooleanCircuit& c) {
  const auto ref_text = [](const BooleanCircuit& circ, const BooleanCircuit::Ref& r) {
    if (r.is_input) return "in(" + circ.inputs.at(r.index).name() + ")";
    return "g" + std::to_string(r.index + 1);
  };
  std::string out = "inputs: " + join_atom_names(c.inputs.atoms()) + "\n";
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const auto& gate = c.gates[g];
    out += "g" + std::to_string(g + 1) + " = ";
    switch (gate.op) {
      case BooleanCircuit::GateOp::And: out += "AND"; break;
      case BooleanCircuit::GateOp::Or: out += "OR"; break;
      case BooleanCircuit::GateOp::Not: out += "NOT"; break;
      case BooleanCircuit::GateOp::Const:
        out += gate.const_value ? "CONST true" : "CONST false";
        break;
    }
    for (const auto& arg : gate.args) out += " " + ref_text(c, arg);
    out += "\n";
  }
  out += "outputs:";
  for (const auto& [atom, ref] : c.outputs) out += " " + atom.name() + "=" + ref_text(c, ref);
  out += "\n";
  return out;
}

Interpretation parse_interpretation_text(const std::string& text) {
  std::vector<Atom> declared, true_atoms;
  bool have_true = false;
  for (const Line& line : content_lines(text, '#')) {
    std::string rest;
    if (take_header(line, "atoms:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      declared.insert(declared.end(), atoms.begin(), atoms.end());
    } else if (take_header(line, "true:", rest)) {
      auto atoms = parse_atom_names(rest, line.number);
      true_atoms.insert(true_atoms.end(), atoms.begin(), atoms.end());
      have_true = true;
    } else {
      throw parse_error("interpretation files have 'atoms:' and 'true:' lines",
                        line.number, 1);
    }
  }
  if (!have_true) throw parse_error("interpretation file needs a 'true:' line", 1, 1);
  try {
    return Interpretation::of_atoms(Alphabet(declared), true_atoms);
  } catch (const error& e) {
    throw parse_error(e.what(), 1, 1);
  }
}

std::string emit_interpretation_text(const Interpretation& m) {
  return "atoms: " + join_atom_names(m.alphabet().atoms()) + "\ntrue: " +
         join_atom_names(m.true_atoms()) + "\n";
}

Formula parse_query_text(const std::string& text) {
  const auto lines = content_lines(text, '#');
  if (lines.size() != 1)
    throw parse_error("query file needs exactly one formula line", 1, 1);
  return parse_formula(lines[0].text, lines[0].number);
}

}  // namespace pkr
