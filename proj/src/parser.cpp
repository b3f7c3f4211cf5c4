#include "pkr/parser.hpp"

#include <cctype>

#include "pkr/errors.hpp"

namespace pkr {

namespace {

struct Lexer {
  enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

  const std::string& text;
  int line;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string atom_text;
  int tok_col = 1;

  Lexer(const std::string& t, int l) : text(t), line(l) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, line, tok_col);
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_col = static_cast<int>(pos) + 1;
    if (pos >= text.size()) { tok = Tok::End; return; }
    const char c = text[pos];
    switch (c) {
      case '~': tok = Tok::Not; ++pos; return;
      case '&': tok = Tok::And; ++pos; return;
      case '|': tok = Tok::Or; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') { tok = Tok::Implies; pos += 2; return; }
        fail("expected '->'");
      case '<':
        if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
          tok = Tok::Iff; pos += 3; return;
        }
        fail("expected '<->'");
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos;
      while (end < text.size()) {
        const char d = text[end];
        if ((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') || (d >= '0' && d <= '9') || d == '_')
          ++end;
        else
          break;
      }
      atom_text = text.substr(pos, end - pos);
      pos = end;
      tok = atom_text == "true" ? Tok::True : atom_text == "false" ? Tok::False : Tok::Atom;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  Lexer lx;

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (lx.tok == Lexer::Tok::Iff) {
      lx.advance();
      return Formula::Iff(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lx.tok == Lexer::Tok::Implies) {
      lx.advance();
      return Formula::Implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    if (lx.tok == Lexer::Tok::Or) {
      lx.advance();
      return Formula::Or(std::move(lhs), parse_or());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    if (lx.tok == Lexer::Tok::And) {
      lx.advance();
      return Formula::And(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_unary() {
    switch (lx.tok) {
      case Lexer::Tok::Not:
        lx.advance();
        return Formula::Not(parse_unary());
      case Lexer::Tok::True:
        lx.advance();
        return Formula::True();
      case Lexer::Tok::False:
        lx.advance();
        return Formula::False();
      case Lexer::Tok::Atom: {
        Atom a(lx.atom_text);
        lx.advance();
        return Formula::Var(std::move(a));
      }
      case Lexer::Tok::LParen: {
        lx.advance();
        Formula f = parse_iff();
        if (lx.tok != Lexer::Tok::RParen) lx.fail("expected ')'");
        lx.advance();
        return f;
      }
      default:
        lx.fail("expected a formula");
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text, int line) {
  Parser p{Lexer(text, line)};
  Formula f = p.parse_iff();
  if (p.lx.tok != Lexer::Tok::End) p.lx.fail("trailing input after formula");
  return f;
}

}  // namespace pkr
