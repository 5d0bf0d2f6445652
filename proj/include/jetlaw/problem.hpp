#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jetlaw/equation.hpp"
#include "jetlaw/expr.hpp"

namespace jetlaw {

// Parsed problem file:
//
//   n = INT ; u_t = expr ( ; option )*
//   option := ref ident = RATIONAL | jet_degree = INT | base_degree = INT | order = INT
struct ProblemFile {
  int n = 1;
  Expr rhs;
  std::map<Symbol, Rational> reference;
  std::optional<int> jet_degree;
  std::optional<int> base_degree;
  std::optional<int> order;

  // Throws InvalidEquation when the right-hand side is not second order.
  EvolutionEquation equation() const { return make_equation(n, rhs, reference); }

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Throws ParseError (ParseError, IndexOutOfRange or TimeDerivativeOnRHS).
ProblemFile parse_problem(std::string_view source);

// A bare expression in the file grammar for dimension n, e.g. a density or a
// flux. Time derivatives are rejected.
Expr parse_expression(std::string_view source, int n);

std::string print_problem(const ProblemFile& file);

}  // namespace jetlaw
