#include "jetlaw/equation.hpp"

#include <algorithm>

#include "jetlaw/errors.hpp"

namespace jetlaw {

std::vector<Symbol> second_order_symbols(int n) {
  std::vector<Symbol> out;
  for (int a = 0; a <= n; ++a) out.push_back(Symbol::base(a));
  out.push_back(Symbol::u());
  for (int i = 1; i <= n; ++i) out.push_back(Symbol::jet(MultiIndex::spatial({i})));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(Symbol::jet(MultiIndex::spatial({i, j})));
  return out;
}

EvolutionEquation make_equation(int n, Expr rhs, std::map<Symbol, Rational> reference) {
  if (n < 1 || n > kMaxSpatialDim)
    throw Error(ErrorCode::InvalidEquation, "spatial dimension must be in 1.." + std::to_string(kMaxSpatialDim));
  const auto allowed = second_order_symbols(n);
  auto is_allowed = [&allowed](Symbol s) {
    return std::find(allowed.begin(), allowed.end(), s) != allowed.end();
  };
  for (Symbol s : rhs.symbols()) {
    if (s.is_jet() && s.multi_index().time_power() > 0)
      throw Error(ErrorCode::InvalidEquation, "right-hand side contains a time derivative");
    if (!is_allowed(s))
      throw Error(ErrorCode::InvalidEquation,
                  "right-hand side symbol " + symbol_name(s, n) + " is not a coordinate or a jet of order <= 2");
  }
  for (const auto& [s, value] : reference) {
    (void)value;
    if (!is_allowed(s))
      throw Error(ErrorCode::InvalidEquation, "reference jet binds " + symbol_name(s, n) +
                                                  ", which is not a coordinate or a jet of order <= 2");
  }
  for (Symbol s : rhs.symbols()) reference.emplace(s, Rational(0));
  return EvolutionEquation{n, std::move(rhs), std::move(reference)};
}

std::map<Symbol, Expr> reference_bindings(const EvolutionEquation& eq) {
  std::map<Symbol, Expr> out;
  for (const auto& [s, v] : eq.reference_jet) out.emplace(s, Expr(v));
  return out;
}

}  // namespace jetlaw
