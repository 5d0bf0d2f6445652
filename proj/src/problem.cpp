#include "jetlaw/problem.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "jetlaw/errors.hpp"

namespace jetlaw {

namespace {

constexpr int kMaxExponent = 1000;

struct Token {
  enum class Kind { Int, Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  ProblemFile problem() {
    ProblemFile file;
    expect_word("n");
    expect_punct('=');
    file.n = expect_small_int("spatial dimension");
    if (file.n < 1 || file.n > kMaxSpatialDim)
      fail(ErrorCode::IndexOutOfRange, previous_, {}, "spatial dimension must be in 1.." + std::to_string(kMaxSpatialDim));
    n_ = file.n;
    expect_punct(';');
    expect_word("u_t");
    expect_punct('=');
    file.rhs = normalize_at(expression(), rhs_start_);
    while (true) {
      if (at_punct(';')) {
        advance();
        option(file);
      } else if (tok_.kind == Token::Kind::End) {
        break;
      } else {
        fail(ErrorCode::ParseError, tok_, {";", "+", "-", "*", "/", "^", "end of input"}, "unexpected " + describe(tok_));
      }
    }
    return file;
  }

  Expr bare_expression(int n) {
    n_ = n;
    const Token start = tok_;
    RawExpr tree = expression();
    if (tok_.kind != Token::Kind::End)
      fail(ErrorCode::ParseError, tok_, {"+", "-", "*", "/", "^", "end of input"}, "unexpected " + describe(tok_));
    return normalize_at(std::move(tree), start);
  }

 private:
  [[noreturn]] static void fail(ErrorCode code, const Token& at, std::vector<std::string> expected,
                                const std::string& message) {
    std::string full = message;
    if (!expected.empty()) {
      full += " (expected one of:";
      for (const auto& e : expected) full += " '" + e + "'";
      full += ")";
    }
    throw ParseError(code, at.line, at.column, std::move(expected), full);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::End: return "end of input";
      case Token::Kind::Int: return "number '" + t.text + "'";
      case Token::Kind::Ident: return "identifier '" + t.text + "'";
      case Token::Kind::Punct: return "'" + t.text + "'";
    }
    return "token";
  }

  void advance() {
    previous_ = tok_;
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = column_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) tok_.text += bump();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Kind::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        tok_.text += bump();
    } else if (std::string_view("=;+-*/^()").find(c) != std::string_view::npos) {
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, bump());
    } else {
      fail(ErrorCode::ParseError, tok_, {}, std::string("unexpected character '") + c + "'");
    }
  }

  char bump() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  bool at_punct(char c) const { return tok_.kind == Token::Kind::Punct && tok_.text[0] == c; }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(ErrorCode::ParseError, tok_, {std::string(1, c)}, "unexpected " + describe(tok_));
    advance();
  }

  void expect_word(const std::string& word) {
    if (tok_.kind != Token::Kind::Ident || tok_.text != word)
      fail(ErrorCode::ParseError, tok_, {word}, "unexpected " + describe(tok_));
    advance();
  }

  mpz_class expect_int() {
    if (tok_.kind != Token::Kind::Int) fail(ErrorCode::ParseError, tok_, {"integer"}, "unexpected " + describe(tok_));
    mpz_class v(tok_.text);
    advance();
    return v;
  }

  int expect_small_int(const char* what) {
    const Token at = tok_;
    const mpz_class v = expect_int();
    if (!v.fits_sint_p() || v > 1000000) fail(ErrorCode::ParseError, at, {}, std::string(what) + " is too large");
    return static_cast<int>(v.get_si());
  }

  Rational rational_literal() {
    bool negative = false;
    if (at_punct('-')) {
      negative = true;
      advance();
    }
    Rational value(expect_int());
    if (at_punct('/')) {
      advance();
      const Token at = tok_;
      const mpz_class den = expect_int();
      if (den == 0) fail(ErrorCode::ParseError, at, {}, "zero denominator in rational literal");
      value /= Rational(den);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }

  void option(ProblemFile& file) {
    if (tok_.kind != Token::Kind::Ident)
      fail(ErrorCode::ParseError, tok_, {"ref", "jet_degree", "base_degree", "order"}, "unexpected " + describe(tok_));
    const std::string word = tok_.text;
    if (word == "ref") {
      advance();
      if (tok_.kind != Token::Kind::Ident) fail(ErrorCode::ParseError, tok_, {"identifier"}, "unexpected " + describe(tok_));
      const Symbol s = resolve(tok_);
      advance();
      expect_punct('=');
      file.reference[s] = rational_literal();
      return;
    }
    std::optional<int>* slot = nullptr;
    if (word == "jet_degree") slot = &file.jet_degree;
    if (word == "base_degree") slot = &file.base_degree;
    if (word == "order") slot = &file.order;
    if (slot == nullptr)
      fail(ErrorCode::ParseError, tok_, {"ref", "jet_degree", "base_degree", "order"}, "unknown option '" + word + "'");
    advance();
    expect_punct('=');
    *slot = expect_small_int(word.c_str());
  }

  // expr := term (("+"|"-") term)*
  RawExpr expression() {
    if (rhs_start_.kind == Token::Kind::End) rhs_start_ = tok_;
    RawExpr lhs = term();
    while (at_punct('+') || at_punct('-')) {
      const auto op = tok_.text[0] == '+' ? RawExpr::Op::Add : RawExpr::Op::Sub;
      advance();
      lhs = RawExpr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  // term := unary (("*"|"/") unary)*
  RawExpr term() {
    RawExpr lhs = unary();
    while (at_punct('*') || at_punct('/')) {
      const auto op = tok_.text[0] == '*' ? RawExpr::Op::Mul : RawExpr::Op::Div;
      advance();
      lhs = RawExpr::binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  // unary := ["-"] factor
  RawExpr unary() {
    if (at_punct('-')) {
      advance();
      return RawExpr::negate(factor());
    }
    return factor();
  }

  // factor := atom ["^" INT]
  RawExpr factor() {
    RawExpr base = atom();
    if (at_punct('^')) {
      advance();
      const Token at = tok_;
      const int e = expect_small_int("exponent");
      if (e > kMaxExponent) fail(ErrorCode::ParseError, at, {}, "exponent is too large");
      return RawExpr::power(std::move(base), e);
    }
    return base;
  }

  // atom := RATIONAL | ident | "(" expr ")"
  RawExpr atom() {
    if (tok_.kind == Token::Kind::Int) {
      RawExpr r = RawExpr::number(Rational(mpz_class(tok_.text)));
      advance();
      return r;
    }
    if (tok_.kind == Token::Kind::Ident) {
      RawExpr r = RawExpr::var(resolve(tok_));
      advance();
      return r;
    }
    if (at_punct('(')) {
      advance();
      RawExpr inner = expression();
      expect_punct(')');
      return inner;
    }
    fail(ErrorCode::ParseError, tok_, {"number", "identifier", "("}, "unexpected " + describe(tok_));
  }

  Symbol resolve(const Token& t) const {
    const std::string& name = t.text;
    if (name == "t") return Symbol::time();
    if (name == "u") return Symbol::u();
    if (name == "x") {
      if (n_ != 1) fail(ErrorCode::IndexOutOfRange, t, {}, "'x' without an index is only valid for n = 1");
      return Symbol::base(1);
    }
    if (name.size() == 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1]))) {
      const int i = name[1] - '0';
      if (i < 1 || i > n_) fail(ErrorCode::IndexOutOfRange, t, {}, "coordinate index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
      return Symbol::base(i);
    }
    if (name.size() > 2 && name.compare(0, 2, "u_") == 0) {
      const std::string indices = name.substr(2);
      bool digits = true;
      bool xs = true;
      bool jet_chars = true;
      for (char c : indices) {
        digits = digits && std::isdigit(static_cast<unsigned char>(c));
        xs = xs && c == 'x';
        jet_chars = jet_chars && (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't');
      }
      if (jet_chars && indices.find('t') != std::string::npos)
        fail(ErrorCode::TimeDerivativeOnRHS, t, {}, "time derivative '" + name + "' is not allowed here");
      if (xs) {
        if (n_ != 1) fail(ErrorCode::IndexOutOfRange, t, {}, "'x' indices are only valid for n = 1");
        MultiIndex m;
        for (std::size_t k = 0; k < indices.size(); ++k) m = m.plus(1);
        return Symbol::jet(m);
      }
      if (digits) {
        MultiIndex m;
        for (char c : indices) {
          const int i = c - '0';
          if (i < 1 || i > n_) fail(ErrorCode::IndexOutOfRange, t, {}, "jet index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
          if (m.count(i) == 255) fail(ErrorCode::ParseError, t, {}, "jet index is too long");
          m = m.plus(i);
        }
        return Symbol::jet(m);
      }
    }
    fail(ErrorCode::ParseError, t, {"t", "x", "x<digit>", "u", "u_<indices>"}, "unknown identifier '" + name + "'");
  }

  static Expr normalize_at(const RawExpr& tree, const Token& at) {
    try {
      return normalize(tree);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByZeroExpr) throw;
      throw ParseError(ErrorCode::ParseError, at.line, at.column, {}, std::string("expression divides by zero"));
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int n_ = 1;
  Token tok_;
  Token previous_;
  Token rhs_start_;
};

}  // namespace

ProblemFile parse_problem(std::string_view source) { return Parser(source).problem(); }

Expr parse_expression(std::string_view source, int n) {
  if (n < 1 || n > kMaxSpatialDim) throw std::invalid_argument("spatial dimension out of range");
  return Parser(source).bare_expression(n);
}

std::string print_problem(const ProblemFile& file) {
  std::string out = "n = " + std::to_string(file.n) + ";\nu_t = " + to_string(file.rhs, file.n);
  for (const auto& [s, v] : file.reference) out += ";\nref " + symbol_name(s, file.n) + " = " + v.get_str();
  if (file.jet_degree) out += ";\njet_degree = " + std::to_string(*file.jet_degree);
  if (file.base_degree) out += ";\nbase_degree = " + std::to_string(*file.base_degree);
  if (file.order) out += ";\norder = " + std::to_string(*file.order);
  out += "\n";
  return out;
}

}  // namespace jetlaw
