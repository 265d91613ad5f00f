#include "addrep/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace addrep {

namespace {

enum class Tok {
  Var, Name, Nat, Plus, Rel, Amp, Pipe, Tilde, Arrow, DArrow, LParen, RParen,
  LBracket, RBracket, Colon, Comma, At, QuantE, QuantA, End
};

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t number = 0;
  Rel rel = Rel::Eq;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_ = {Tok::Nat, text_.substr(i_, j - i_), std::stoull(text_.substr(i_, j - i_)), Rel::Eq, i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])))) ++j;
      std::string word = text_.substr(i_, j - i_);
      if (word == "E") tok_ = {Tok::QuantE, word, 0, Rel::Eq, i_};
      else if (word == "A") tok_ = {Tok::QuantA, word, 0, Rel::Eq, i_};
      else if (std::isupper(static_cast<unsigned char>(c))) tok_ = {Tok::Name, word, 0, Rel::Eq, i_};
      else {
        for (char ch : word)
          if (std::isupper(static_cast<unsigned char>(ch)))
            throw FormulaParseError("variables are lowercase: '" + word + "'", i_);
        tok_ = {Tok::Var, word, 0, Rel::Eq, i_};
      }
      i_ = j;
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && i_ + 1 < text_.size() && text_[i_ + 1] == b;
    };
    switch (c) {
      case '+': tok_ = {Tok::Plus, "+", 0, Rel::Eq, i_}; i_ += 1; return;
      case '&': tok_ = {Tok::Amp, "&", 0, Rel::Eq, i_}; i_ += 1; return;
      case '|': tok_ = {Tok::Pipe, "|", 0, Rel::Eq, i_}; i_ += 1; return;
      case '~': tok_ = {Tok::Tilde, "~", 0, Rel::Eq, i_}; i_ += 1; return;
      case '(': tok_ = {Tok::LParen, "(", 0, Rel::Eq, i_}; i_ += 1; return;
      case ')': tok_ = {Tok::RParen, ")", 0, Rel::Eq, i_}; i_ += 1; return;
      case '[': tok_ = {Tok::LBracket, "[", 0, Rel::Eq, i_}; i_ += 1; return;
      case ']': tok_ = {Tok::RBracket, "]", 0, Rel::Eq, i_}; i_ += 1; return;
      case ':': tok_ = {Tok::Colon, ":", 0, Rel::Eq, i_}; i_ += 1; return;
      case ',': tok_ = {Tok::Comma, ",", 0, Rel::Eq, i_}; i_ += 1; return;
      case '@': tok_ = {Tok::At, "@", 0, Rel::Eq, i_}; i_ += 1; return;
      case '*': throw FormulaParseError("multiplication is not in the supported theory", i_);
      case '!':
        if (two('!', '=')) { tok_ = {Tok::Rel, "!=", 0, Rel::Ne, i_}; i_ += 2; return; }
        throw FormulaParseError("expected '!='", i_);
      case '=':
        if (two('=', '>')) { tok_ = {Tok::Arrow, "=>", 0, Rel::Eq, i_}; i_ += 2; return; }
        tok_ = {Tok::Rel, "=", 0, Rel::Eq, i_}; i_ += 1; return;
      case '<':
        if (i_ + 2 < text_.size() && text_[i_ + 1] == '=' && text_[i_ + 2] == '>') {
          tok_ = {Tok::DArrow, "<=>", 0, Rel::Eq, i_}; i_ += 3; return;
        }
        if (two('<', '=')) { tok_ = {Tok::Rel, "<=", 0, Rel::Le, i_}; i_ += 2; return; }
        tok_ = {Tok::Rel, "<", 0, Rel::Lt, i_}; i_ += 1; return;
      case '>':
        if (two('>', '=')) { tok_ = {Tok::Rel, ">=", 0, Rel::Ge, i_}; i_ += 2; return; }
        tok_ = {Tok::Rel, ">", 0, Rel::Gt, i_}; i_ += 1; return;
      default:
        throw FormulaParseError(std::string("unexpected character '") + c + "'", i_);
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    if (lex_.peek().kind != Tok::End)
      throw FormulaParseError("unexpected trailing input", lex_.peek().pos);
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_implies();
    while (lex_.peek().kind == Tok::DArrow) {
      lex_.take();
      Formula g = parse_implies();
      f = connective(FormulaKind::Iff, std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      Formula g = parse_implies();  // right associative
      f = connective(FormulaKind::Implies, std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      Formula g = parse_and();
      f = connective(FormulaKind::Or, std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      Formula g = parse_unary();
      f = connective(FormulaKind::And, std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Tilde) {
      lex_.take();
      Formula f;
      f.kind = FormulaKind::Not;
      f.children.push_back(parse_unary());
      return f;
    }
    if (t.kind == Tok::QuantE || t.kind == Tok::QuantA) {
      Token q = lex_.take();
      Formula f;
      f.kind = (q.kind == Tok::QuantE) ? FormulaKind::Exists : FormulaKind::ForAll;
      f.bound = parse_varlist();
      expect(Tok::Colon, "':'");
      f.children.push_back(parse_iff());  // body extends right as far as possible
      return f;
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      Formula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_atom();
  }

  std::vector<std::string> parse_varlist() {
    std::vector<std::string> vars;
    while (true) {
      Token v = expect(Tok::Var, "variable");
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
        throw FormulaParseError("duplicate variable '" + v.text + "' in quantifier", v.pos);
      vars.push_back(v.text);
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return vars;
  }

  Formula parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Name) {
      Token name = lex_.take();
      expect(Tok::LBracket, "'['");
      Token var = expect(Tok::Var, "index variable");
      expect(Tok::RBracket, "']'");
      Token rel = expect(Tok::Rel, "'='");
      if (rel.rel != Rel::Eq) throw FormulaParseError("sequence atoms use '= @value'", rel.pos);
      expect(Tok::At, "'@'");
      Token val = expect(Tok::Nat, "output value");
      Formula f;
      f.kind = FormulaKind::SeqAtom;
      f.seq = {name.text, var.text, static_cast<int>(val.number)};
      return f;
    }
    if (t.kind == Tok::Var || t.kind == Tok::Nat) {
      Formula f;
      f.kind = FormulaKind::Atom;
      parse_term(f.atom.lhs_vars, f.atom.lhs_const);
      Token rel = expect(Tok::Rel, "relation");
      f.atom.rel = rel.rel;
      parse_term(f.atom.rhs_vars, f.atom.rhs_const);
      return f;
    }
    throw FormulaParseError("expected an atom, '~', a quantifier or '('", t.pos);
  }

  void parse_term(std::vector<std::string>& vars, std::uint64_t& constant) {
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Var) vars.push_back(lex_.take().text);
      else if (t.kind == Tok::Nat) constant += lex_.take().number;
      else throw FormulaParseError("expected variable or constant", t.pos);
      if (lex_.peek().kind != Tok::Plus) break;
      lex_.take();
    }
  }

  static Formula connective(FormulaKind kind, Formula a, Formula b) {
    Formula f;
    f.kind = kind;
    f.children.push_back(std::move(a));
    f.children.push_back(std::move(b));
    return f;
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      throw FormulaParseError("expected " + what, lex_.peek().pos);
    return lex_.take();
  }

  Lexer lex_;
};

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& free) {
  switch (f.kind) {
    case FormulaKind::Atom:
      for (const auto& v : f.atom.lhs_vars)
        if (!bound.count(v)) free.insert(v);
      for (const auto& v : f.atom.rhs_vars)
        if (!bound.count(v)) free.insert(v);
      break;
    case FormulaKind::SeqAtom:
      if (!bound.count(f.seq.var)) free.insert(f.seq.var);
      break;
    case FormulaKind::Exists:
    case FormulaKind::ForAll: {
      std::set<std::string> inner = bound;
      inner.insert(f.bound.begin(), f.bound.end());
      collect_free(f.children[0], inner, free);
      break;
    }
    default:
      for (const auto& c : f.children) collect_free(c, bound, free);
  }
}

Formula rename_walk(const Formula& f, std::map<std::string, std::string>& env, int& counter) {
  Formula out = f;
  auto subst = [&](const std::string& v) {
    auto it = env.find(v);
    return it == env.end() ? v : it->second;
  };
  switch (f.kind) {
    case FormulaKind::Atom:
      for (auto& v : out.atom.lhs_vars) v = subst(v);
      for (auto& v : out.atom.rhs_vars) v = subst(v);
      return out;
    case FormulaKind::SeqAtom:
      out.seq.var = subst(f.seq.var);
      return out;
    case FormulaKind::Exists:
    case FormulaKind::ForAll: {
      std::map<std::string, std::string> inner = env;
      out.bound.clear();
      for (const auto& v : f.bound) {
        std::string fresh = "#b" + std::to_string(++counter);
        inner[v] = fresh;
        out.bound.push_back(fresh);
      }
      out.children = {rename_walk(f.children[0], inner, counter)};
      return out;
    }
    default:
      out.children.clear();
      for (const auto& c : f.children) out.children.push_back(rename_walk(c, env, counter));
      return out;
  }
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, free;
  collect_free(f, bound, free);
  return {free.begin(), free.end()};
}

Formula rename_bound(const Formula& f) {
  std::map<std::string, std::string> env;
  int counter = 0;
  return rename_walk(f, env, counter);
}

}  // namespace addrep
