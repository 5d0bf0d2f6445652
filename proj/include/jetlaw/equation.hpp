#pragma once

#include <map>

#include "jetlaw/expr.hpp"

namespace jetlaw {

// u_t = G(x, t, u, grad u, Hess u) in n spatial dimensions, together with the
// base 2-jet at which pointwise symbol data is certified.
struct EvolutionEquation {
  int n = 1;
  Expr rhs;
  std::map<Symbol, Rational> reference_jet;
};

// Checks the equation invariants and returns a copy whose reference jet binds
// every symbol of the right-hand side (unbound symbols default to 0).
// Throws InvalidEquation.
EvolutionEquation make_equation(int n, Expr rhs, std::map<Symbol, Rational> reference = {});

// Every symbol that may legally appear in a right-hand side for dimension n:
// t, x^i, u, u_i, u_ij.
std::vector<Symbol> second_order_symbols(int n);

// Symbol -> value bindings of the reference jet, for substitute().
std::map<Symbol, Expr> reference_bindings(const EvolutionEquation& eq);

}  // namespace jetlaw
