#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "jetlaw/symbol.hpp"

namespace jetlaw {

using Rational = mpq_class;

// Power product of symbols, factors sorted by ascending symbol.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned degree_in(Symbol s) const;
  unsigned degree_if(const std::function<bool(Symbol)>& pred) const;

  Monomial operator*(const Monomial& other) const;
  std::optional<Monomial> divided_by(const Monomial& other) const;
  // Same monomial with the exponent of s replaced (0 removes the factor).
  Monomial with_exponent(Symbol s, unsigned exponent) const;
  // Splits into (factors satisfying pred, the rest).
  std::pair<Monomial, Monomial> split(const std::function<bool(Symbol)>& pred) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic order, larger symbols more significant. This is a
  // monomial order (compatible with multiplication).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

Monomial gcd(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over the rationals. Terms are kept sorted by
// ascending monomial order with nonzero coefficients, so equal polynomials
// have equal representations.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Polynomial(Symbol s);                            // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c);

  // Sorts and merges arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.back(); }

  unsigned degree() const;
  unsigned degree_in(Symbol s) const;
  bool contains(Symbol s) const { return degree_in(s) > 0; }
  bool contains_if(const std::function<bool(Symbol)>& pred) const;
  std::vector<Symbol> symbols() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial multiply_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial diff(Symbol s) const;

  // Coefficients with respect to s: result[k] is the coefficient of s^k.
  std::vector<Polynomial> coefficients_in(Symbol s) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Symbol s);

  // Divides by the leading coefficient (no-op on zero).
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_scaled(const Polynomial& other, const Rational& scale);
  std::vector<Term> terms_;
};

// Exact quotient when b divides a, otherwise nullopt. b must be nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalized to leading coefficient 1 (0 only when
// both inputs are 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace jetlaw
