#include <cctype>
#include <climits>
#include <string>
#include <vector>

#include "chiy/motivic.hpp"

namespace chiy {

namespace {

struct Token {
  enum Kind { ident, number, punct, end } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance();
      continue;
    }
    Token tok{Token::punct, "", line, col};
    if (std::isalpha(c) || c == '_') {
      tok.kind = Token::ident;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        tok.text += text[i];
        advance();
      }
    } else if (std::isdigit(c)) {
      tok.kind = Token::number;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        tok.text += text[i];
        advance();
      }
    } else if (std::string("()+-*^,;").find(static_cast<char>(c)) != std::string::npos) {
      tok.text = std::string(1, static_cast<char>(c));
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Token::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const DeclRegistry& reg) : toks_(tokenize(text)), reg_(reg) {}

  VarietyExpr parse() {
    VarietyExpr e = expr();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  VarietyExpr expr() {
    VarietyExpr acc = term();
    while (is_punct("+") || is_punct("-")) {
      bool plus = next().text == "+";
      VarietyExpr rhs = term();
      acc = plus ? VarietyExpr::sum(acc, rhs) : VarietyExpr::diff(acc, rhs);
    }
    return acc;
  }

  VarietyExpr term() {
    VarietyExpr acc = factor();
    while (is_punct("*")) {
      next();
      acc = VarietyExpr::prod(acc, factor());
    }
    return acc;
  }

  VarietyExpr factor() {
    const Token& tok = peek();
    if (is_punct("(")) {
      next();
      VarietyExpr e = expr();
      expect(")");
      return e;
    }
    if (tok.kind != Token::ident) fail(tok.kind == Token::end ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    Token id = next();
    if (id.text == "pt") return VarietyExpr::pt();
    if (id.text == "Gm") return VarietyExpr::torus();
    if (id.text == "A" || id.text == "P") {
      expect("(");
      int n = integer(0, "dimension");
      expect(")");
      return id.text == "A" ? VarietyExpr::affine(n) : VarietyExpr::proj(n);
    }
    if (id.text == "L") {
      if (!is_punct("^")) return VarietyExpr::lefschetz(1);
      next();
      expect("(");
      int k = integer(INT_MIN, "exponent");
      expect(")");
      return VarietyExpr::lefschetz(k);
    }
    if (id.text == "decl") {
      expect("(");
      const Token& name = peek();
      if (name.kind != Token::ident) fail("expected a declaration name");
      std::string n = next().text;
      expect(")");
      return VarietyExpr::declared(n, reg_);
    }
    if (id.text == "projbundle") {
      expect("(");
      VarietyExpr base = expr();
      expect(",");
      int r = integer(0, "fiber dimension");
      expect(")");
      return VarietyExpr::proj_bundle(base, r);
    }
    if (id.text == "blowup") {
      expect("(");
      VarietyExpr base = expr();
      expect(";");
      VarietyExpr center = expr();
      expect(",");
      int c = integer(1, "codimension");
      expect(")");
      return VarietyExpr::blow_up(base, center, c);
    }
    fail("unknown constructor '" + id.text + "'", id);
  }

  int integer(int min, const char* what) {
    const Token start = peek();
    bool negative = false;
    if (is_punct("-")) {
      next();
      negative = true;
    }
    const Token& tok = peek();
    if (tok.kind != Token::number) fail(std::string("expected an integer ") + what);
    long long value = 0;
    for (char ch : tok.text) {
      value = value * 10 + (ch - '0');
      if (value > 1000000) fail(std::string(what) + " is out of range", tok);
    }
    next();
    if (negative) value = -value;
    if (value < min) fail(std::string(what) + " must be >= " + std::to_string(min), start);
    return static_cast<int>(value);
  }

  bool is_punct(const char* p) const { return peek().kind == Token::punct && peek().text == p; }
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    next();
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const DeclRegistry& reg_;
};

}  // namespace

VarietyExpr parse_expr(const std::string& text, const DeclRegistry& reg) { return Parser(text, reg).parse(); }

}  // namespace chiy
