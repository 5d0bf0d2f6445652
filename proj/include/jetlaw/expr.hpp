#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jetlaw/polynomial.hpp"

namespace jetlaw {

// Exact rational function in canonical form: gcd(numerator, denominator) = 1
// and the denominator's leading coefficient is 1, so two expressions are
// equal as rational functions iff their representations are identical.
class Expr {
 public:
  Expr() : den_(1) {}
  Expr(int c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  Expr(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  Expr(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  Expr(Symbol s) : num_(s), den_(1) {}              // NOLINT(google-explicit-constructor)
  Expr(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  // Throws DivisionByZeroExpr when den is the zero polynomial.
  static Expr fraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  std::vector<Symbol> symbols() const;
  bool contains_if(const std::function<bool(Symbol)>& pred) const {
    return num_.contains_if(pred) || den_.contains_if(pred);
  }

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  Expr& operator/=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator/(Expr a, const Expr& b) { return a /= b; }

  Expr pow(int exponent) const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Expr(Polynomial num, Polynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  // Normalizes num/den whose gcd is already known to be constant.
  static Expr from_coprime(Polynomial num, Polynomial den);
  Polynomial num_;
  Polynomial den_;
};

// Unnormalized expression tree, as produced by the parser or built by hand.
struct RawExpr {
  enum class Op { Number, Var, Add, Sub, Mul, Div, Neg, Pow };

  Op op = Op::Number;
  Rational value;
  Symbol symbol;
  int exponent = 0;
  std::vector<RawExpr> args;

  static RawExpr number(const Rational& v);
  static RawExpr var(Symbol s);
  static RawExpr binary(Op op, RawExpr lhs, RawExpr rhs);
  static RawExpr negate(RawExpr arg);
  static RawExpr power(RawExpr base, int exponent);
};

Expr normalize(const RawExpr& tree);

// Formal partial derivative; every other symbol is a constant.
Expr diff(const Expr& e, Symbol s);
// Applies a derivation to e = n/d given its values dn, dd on n and d.
Expr derivative_of_quotient(const Expr& e, const Polynomial& dn, const Polynomial& dd);

// Simultaneous substitution.
Expr substitute(const Expr& e, const std::map<Symbol, Expr>& bindings);

// Coefficients of e as a polynomial in the symbols selected by is_var. The
// key is the monomial in those symbols. Throws NotPolynomialIn when the
// denominator involves a selected symbol.
std::map<Monomial, Expr> poly_coefficients(const Expr& e, const std::function<bool(Symbol)>& is_var);
std::map<Monomial, Expr> poly_coefficients(const Expr& e, const std::set<Symbol>& vars);

Expr monomial_expr(const Monomial& m);

// Grammar-compatible rendering for dimension n; parses back to e.
std::string to_string(const Polynomial& p, int n);
std::string to_string(const Expr& e, int n);

}  // namespace jetlaw
