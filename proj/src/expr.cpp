#include "jetlaw/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "jetlaw/errors.hpp"

namespace jetlaw {

Expr Expr::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "denominator is identically zero");
  if (num.is_zero()) return Expr();
  if (den.is_constant()) {
    num *= 1 / den.constant_value();
    return Expr(std::move(num), Polynomial(1), true);
  }
  const Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = *exact_divide(num, g);
    den = *exact_divide(den, g);
  }
  return from_coprime(std::move(num), std::move(den));
}

Expr Expr::from_coprime(Polynomial num, Polynomial den) {
  if (num.is_zero()) return Expr();
  if (den.is_constant()) {
    num *= 1 / den.constant_value();
    return Expr(std::move(num), Polynomial(1), true);
  }
  const Rational lc = den.leading_term().coef;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return Expr(std::move(num), std::move(den), true);
}

std::vector<Symbol> Expr::symbols() const {
  auto out = num_.symbols();
  const auto d = den_.symbols();
  out.insert(out.end(), d.begin(), d.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Expr Expr::operator-() const { return Expr(-num_, den_, true); }

Expr& Expr::operator+=(const Expr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = fraction(num_ + o.num_, den_);
    return *this;
  }
  // With g = gcd(b, d): a/b + c/d = (a*d' + c*b') / (b'*d'*g), and only g can
  // share a factor with the new numerator.
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial b1 = *exact_divide(den_, g);
  const Polynomial d1 = *exact_divide(o.den_, g);
  Polynomial num = num_ * d1 + o.num_ * b1;
  if (num.is_zero()) return *this = Expr();
  Expr reduced = fraction(std::move(num), g);
  *this = from_coprime(reduced.num_, reduced.den_ * b1 * d1);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial num = *exact_divide(num_, g1) * *exact_divide(o.num_, g2);
  Polynomial den = *exact_divide(den_, g2) * *exact_divide(o.den_, g1);
  *this = from_coprime(std::move(num), std::move(den));
  return *this;
}

Expr& Expr::operator/=(const Expr& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "division by an expression that is identically zero");
  return *this *= from_coprime(o.den_, o.num_);
}

Expr Expr::pow(int exponent) const {
  if (exponent >= 0) {
    if (is_polynomial()) return Expr(num_.pow(static_cast<unsigned>(exponent)));
    return Expr(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)), true);
  }
  if (is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "negative power of zero");
  const auto k = static_cast<unsigned>(-exponent);
  return fraction(den_.pow(k), num_.pow(k));
}

RawExpr RawExpr::number(const Rational& v) {
  RawExpr r;
  r.op = Op::Number;
  r.value = v;
  return r;
}

RawExpr RawExpr::var(Symbol s) {
  RawExpr r;
  r.op = Op::Var;
  r.symbol = s;
  return r;
}

RawExpr RawExpr::binary(Op op, RawExpr lhs, RawExpr rhs) {
  RawExpr r;
  r.op = op;
  r.args.push_back(std::move(lhs));
  r.args.push_back(std::move(rhs));
  return r;
}

RawExpr RawExpr::negate(RawExpr arg) {
  RawExpr r;
  r.op = Op::Neg;
  r.args.push_back(std::move(arg));
  return r;
}

RawExpr RawExpr::power(RawExpr base, int exponent) {
  RawExpr r;
  r.op = Op::Pow;
  r.exponent = exponent;
  r.args.push_back(std::move(base));
  return r;
}

Expr normalize(const RawExpr& tree) {
  using Op = RawExpr::Op;
  switch (tree.op) {
    case Op::Number: return Expr(tree.value);
    case Op::Var: return Expr(tree.symbol);
    case Op::Add: return normalize(tree.args.at(0)) + normalize(tree.args.at(1));
    case Op::Sub: return normalize(tree.args.at(0)) - normalize(tree.args.at(1));
    case Op::Mul: return normalize(tree.args.at(0)) * normalize(tree.args.at(1));
    case Op::Div: return normalize(tree.args.at(0)) / normalize(tree.args.at(1));
    case Op::Neg: return -normalize(tree.args.at(0));
    case Op::Pow: return normalize(tree.args.at(0)).pow(tree.exponent);
  }
  throw std::logic_error("unknown expression node");
}

Expr diff(const Expr& e, Symbol s) {
  if (e.is_polynomial()) {
    Polynomial d = e.numerator().diff(s);
    return Expr::fraction(std::move(d), e.denominator());
  }
  return derivative_of_quotient(e, e.numerator().diff(s), e.denominator().diff(s));
}

Expr derivative_of_quotient(const Expr& e, const Polynomial& dn, const Polynomial& dd) {
  const Polynomial& n = e.numerator();
  const Polynomial& d = e.denominator();
  if (dd.is_zero()) return Expr::fraction(dn, d);
  // With g = gcd(d, dd), d = g*d1 and dd = g*h, the numerator dn*d1 - n*h is
  // coprime to d1, so only g needs a gcd.
  const Polynomial g = gcd(d, dd);
  const Polynomial d1 = *exact_divide(d, g);
  const Expr part = Expr::fraction(dn * d1 - n * *exact_divide(dd, g), g);
  return part * Expr::fraction(Polynomial(1), d1 * d1);
}

namespace {

bool all_polynomial(const std::map<Symbol, Expr>& bindings) {
  return std::all_of(bindings.begin(), bindings.end(),
                     [](const auto& kv) { return kv.second.is_polynomial(); });
}

Polynomial substitute_polynomial(const Polynomial& p, const std::map<Symbol, Polynomial>& bindings) {
  std::map<std::pair<Symbol, unsigned>, Polynomial> powers;
  auto power_of = [&](Symbol s, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, bindings.at(s).pow(e)).first->second;
  };
  Polynomial out;
  std::vector<Polynomial::Term> plain;
  for (const auto& t : p.terms()) {
    Monomial rest;
    Polynomial product(1);
    bool bound = false;
    std::vector<Monomial::Factor> keep;
    for (const auto& [s, e] : t.mono.factors()) {
      if (bindings.count(s) != 0) {
        product = product * power_of(s, e);
        bound = true;
      } else {
        keep.emplace_back(s, e);
      }
    }
    rest = Monomial::from_factors(std::move(keep));
    if (!bound) {
      plain.push_back({rest, t.coef});
      continue;
    }
    out += product.multiply_monomial(rest, t.coef);
  }
  out += Polynomial::from_terms(std::move(plain));
  return out;
}

Expr substitute_general(const Polynomial& p, const std::map<Symbol, Expr>& bindings) {
  Expr out;
  for (const auto& t : p.terms()) {
    Expr term(t.coef);
    for (const auto& [s, e] : t.mono.factors()) {
      auto it = bindings.find(s);
      term *= it == bindings.end() ? Expr(s).pow(static_cast<int>(e)) : it->second.pow(static_cast<int>(e));
    }
    out += term;
  }
  return out;
}

}  // namespace

Expr substitute(const Expr& e, const std::map<Symbol, Expr>& bindings) {
  if (bindings.empty()) return e;
  if (all_polynomial(bindings)) {
    std::map<Symbol, Polynomial> polys;
    for (const auto& [s, v] : bindings)
      polys.emplace(s, v.numerator() * (1 / v.denominator().constant_value()));
    Polynomial num = substitute_polynomial(e.numerator(), polys);
    if (e.is_polynomial()) return Expr::fraction(std::move(num), e.denominator());
    return Expr::fraction(std::move(num), substitute_polynomial(e.denominator(), polys));
  }
  const Expr num = substitute_general(e.numerator(), bindings);
  const Expr den = substitute_general(e.denominator(), bindings);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "substitution makes the denominator vanish");
  return num / den;
}

std::map<Monomial, Expr> poly_coefficients(const Expr& e, const std::function<bool(Symbol)>& is_var) {
  if (e.denominator().contains_if(is_var))
    throw Error(ErrorCode::NotPolynomialIn, "denominator depends on a coefficient-extraction variable");
  std::map<Monomial, std::vector<Polynomial::Term>> buckets;
  for (const auto& t : e.numerator().terms()) {
    auto [key, rest] = t.mono.split(is_var);
    buckets[std::move(key)].push_back({std::move(rest), t.coef});
  }
  std::map<Monomial, Expr> out;
  for (auto& [key, terms] : buckets) {
    Expr c = Expr::fraction(Polynomial::from_terms(std::move(terms)), e.denominator());
    if (!c.is_zero()) out.emplace(key, std::move(c));
  }
  return out;
}

std::map<Monomial, Expr> poly_coefficients(const Expr& e, const std::set<Symbol>& vars) {
  return poly_coefficients(e, [&vars](Symbol s) { return vars.count(s) != 0; });
}

Expr monomial_expr(const Monomial& m) { return Expr(Polynomial(m, Rational(1))); }

namespace {

std::string monomial_string(const Monomial& m, int n) {
  std::string out;
  for (const auto& [s, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += symbol_name(s, n);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, int n) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Rational& c = it->coef;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (it->mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_string(it->mono, n);
    } else {
      out += mag.get_str() + '*' + monomial_string(it->mono, n);
    }
  }
  return out;
}

std::string to_string(const Expr& e, int n) {
  if (e.is_polynomial()) return to_string(e.numerator(), n);
  return "(" + to_string(e.numerator(), n) + ")/(" + to_string(e.denominator(), n) + ")";
}

}  // namespace jetlaw
