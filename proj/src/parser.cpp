#include "parser.hpp"

#include <cctype>
#include <vector>

#include "errors.hpp"

namespace ipfo {

namespace {

enum class Tok {
  Name, LParen, RParen, Comma, Dot, Amp, Pipe, Arrow, Bang, Lt, Gt, LeOp, Eq,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Name, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", pos}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", pos}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", pos}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", pos}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", pos}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", pos}); ++i; break;
      case '!': out.push_back({Tok::Bang, "!", pos}); ++i; break;
      case '=': out.push_back({Tok::Eq, "=", pos}); ++i; break;
      case '>': out.push_back({Tok::Gt, ">", pos}); ++i; break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          out.push_back({Tok::LeOp, "<=", pos});
          i += 2;
        } else {
          out.push_back({Tok::Lt, "<", pos});
          ++i;
        }
        break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", pos});
          i += 2;
        } else {
          throw ParseError("unexpected character '-'", pos);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  const Token& peek2() const { return toks[std::min(at + 1, toks.size() - 1)]; }
  Token next() { return toks[at++]; }
  bool accept(Tok k) {
    if (toks[at].kind == k) {
      ++at;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const char* what) {
    if (toks[at].kind != k)
      throw ParseError(std::string("expected ") + what, toks[at].pos);
    return toks[at++];
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, toks[at].pos);
  }

  std::string expect_var() {
    Token t = expect(Tok::Name, "a variable");
    if (!is_var_name(t.text))
      throw ParseError("'" + t.text + "' is not a valid variable name", t.pos);
    return t.text;
  }

  // ---- FO -------------------------------------------------------------

  FoPtr fo_formula() { return fo_implies_level(); }

  FoPtr fo_implies_level() {
    FoPtr lhs = fo_or_level();
    if (accept(Tok::Arrow)) return fo_implies(lhs, fo_implies_level());
    return lhs;
  }

  FoPtr fo_or_level() {
    FoPtr lhs = fo_and_level();
    while (peek().kind == Tok::Pipe) {
      next();
      lhs = fo_or(lhs, fo_and_level());
    }
    return lhs;
  }

  FoPtr fo_and_level() {
    FoPtr lhs = fo_unary();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = fo_and(lhs, fo_unary());
    }
    return lhs;
  }

  FoPtr fo_unary() {
    if (accept(Tok::Bang)) return fo_not(fo_unary());
    if (peek().kind == Tok::Name &&
        (peek().text == "exists" || peek().text == "forall")) {
      bool ex = next().text == "exists";
      std::string v = expect_var();
      expect(Tok::Dot, "'.' after quantified variable");
      FoPtr body = fo_formula();  // quantifier scope extends maximally right
      return ex ? fo_exists(v, body) : fo_forall(v, body);
    }
    return fo_primary();
  }

  FoPtr fo_primary() {
    if (accept(Tok::LParen)) {
      FoPtr f = fo_formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    Token t = expect(Tok::Name, "an atom or '('");
    if (peek().kind == Tok::LParen) {
      next();
      std::string x = expect_var();
      if (accept(Tok::Comma)) {
        std::string y = expect_var();
        expect(Tok::RParen, "')'");
        if (!is_rel_name(t.text))
          throw ParseError("'" + t.text + "' is not a valid relation symbol",
                           t.pos);
        return fo_rel(t.text, x, y);
      }
      expect(Tok::RParen, "')'");
      if (!is_pred_name(t.text))
        throw ParseError("'" + t.text + "' is not a valid predicate name",
                         t.pos);
      return fo_pred(t.text, x);
    }
    // var <= var | var = var
    if (!is_var_name(t.text))
      throw ParseError("'" + t.text + "' is not a valid variable name", t.pos);
    if (accept(Tok::LeOp)) return fo_le(t.text, expect_var());
    if (accept(Tok::Eq)) return fo_eq(t.text, expect_var());
    fail("expected '<=', '=' or '(' after '" + t.text + "'");
  }

  // ---- PDL state ------------------------------------------------------

  StatePtr state_formula() { return state_or_level(); }

  StatePtr state_or_level() {
    StatePtr lhs = state_and_level();
    while (peek().kind == Tok::Pipe) {
      next();
      lhs = st_or(lhs, state_and_level());
    }
    return lhs;
  }

  StatePtr state_and_level() {
    StatePtr lhs = state_unary();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = st_and(lhs, state_unary());
    }
    return lhs;
  }

  StatePtr state_unary() {
    if (accept(Tok::Bang)) return st_not(state_unary());
    if (accept(Tok::Lt)) {
      PathPtr p = path_formula();
      expect(Tok::Gt, "'>'");
      return st_diamond(p, state_unary());
    }
    return state_primary();
  }

  StatePtr state_primary() {
    if (accept(Tok::LParen)) {
      StatePtr s = state_formula();
      expect(Tok::RParen, "')'");
      return s;
    }
    Token t = expect(Tok::Name, "a state formula");
    if (t.text == "true") return st_true();
    if (t.text == "false") return st_false();
    if (t.text == "loop") {
      expect(Tok::LParen, "'('");
      PathPtr p = path_formula();
      expect(Tok::RParen, "')'");
      return st_loop(p);
    }
    if (!is_pred_name(t.text))
      throw ParseError("'" + t.text + "' is not a valid predicate name", t.pos);
    return st_pred(t.text);
  }

  // ---- PDL path -------------------------------------------------------

  PathPtr path_formula() { return path_union_level(); }

  PathPtr path_union_level() {
    PathPtr lhs = path_inter_level();
    while (peek().kind == Tok::Pipe) {
      next();
      lhs = pt_union(lhs, path_inter_level());
    }
    return lhs;
  }

  PathPtr path_inter_level() {
    PathPtr lhs = path_compose_level();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = pt_inter(lhs, path_compose_level());
    }
    return lhs;
  }

  PathPtr path_compose_level() {
    PathPtr lhs = path_primary();
    while (peek().kind == Tok::Dot) {
      next();
      lhs = pt_compose(lhs, path_primary());
    }
    return lhs;
  }

  PathPtr path_unary_fn(const std::string& fn) {
    expect(Tok::LParen, "'('");
    PathPtr p = path_formula();
    expect(Tok::RParen, "')'");
    if (fn == "inv") return pt_converse(p);
    if (fn == "comp") return pt_complement(p);
    return pt_c(fn[1] - '0', p);
  }

  PathPtr path_primary() {
    if (accept(Tok::LParen)) {
      PathPtr p = path_formula();
      expect(Tok::RParen, "')'");
      return p;
    }
    Token t = expect(Tok::Name, "a path formula");
    if (t.text == "le") return pt_le();
    if (t.text == "test") {
      expect(Tok::LParen, "'('");
      StatePtr s = state_formula();
      expect(Tok::RParen, "')'");
      return pt_test(s);
    }
    if (t.text == "inv" || t.text == "comp" || t.text == "c1" ||
        t.text == "c2" || t.text == "c3" || t.text == "c4")
      return path_unary_fn(t.text);
    if (!is_rel_name(t.text))
      throw ParseError("'" + t.text + "' is not a valid relation symbol",
                       t.pos);
    return pt_atom(t.text);
  }
};

template <typename F>
auto run(const std::string& text, F&& body) {
  Parser p{lex(text)};
  auto result = body(p);
  if (p.peek().kind != Tok::End)
    throw ParseError("unexpected trailing input", p.peek().pos);
  return result;
}

}  // namespace

FoPtr parse_fo(const std::string& text) {
  return run(text, [](Parser& p) { return p.fo_formula(); });
}

StatePtr parse_state(const std::string& text) {
  return run(text, [](Parser& p) { return p.state_formula(); });
}

PathPtr parse_path(const std::string& text) {
  return run(text, [](Parser& p) { return p.path_formula(); });
}

AnyFormula parse_any(const std::string& text) {
  ParseError best("empty input", 0);
  bool have_err = false;
  try {
    return {FormulaSort::Fo, parse_fo(text), nullptr, nullptr};
  } catch (const ParseError& e) {
    best = e;
    have_err = true;
  }
  try {
    return {FormulaSort::State, nullptr, parse_state(text), nullptr};
  } catch (const ParseError& e) {
    if (e.pos > best.pos) best = e;
  }
  try {
    return {FormulaSort::Path, nullptr, nullptr, parse_path(text)};
  } catch (const ParseError& e) {
    if (e.pos > best.pos) best = e;
  }
  (void)have_err;
  throw best;
}

}  // namespace ipfo
