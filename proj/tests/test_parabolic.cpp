#include "doctest.h"

#include "jetlaw/errors.hpp"
#include "jetlaw/parabolic.hpp"
#include "support.hpp"

using namespace jt;

namespace {

std::map<Symbol, Rational> hessian_identity() { return {{jet({1, 1}), 1}, {jet({2, 2}), 1}}; }

// Hessian coordinates u_ij, i <= j.
std::vector<Symbol> hessian(int n) {
  std::vector<Symbol> h;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) h.push_back(jet({i, j}));
  return h;
}

Expr xi_monomial(Symbol s) {
  const MultiIndex m = s.multi_index();
  Expr r(1);
  for (int i = 1; i <= kMaxSpatialDim; ++i) r *= Expr(xi(i)).pow(m.count(i));
  return r;
}

// q(xi) = sum over unordered pairs I, J of d^2G/du_I du_J xi^I xi^J.
Expr quartic_by_sum(const EvolutionEquation& eq) {
  Expr q;
  for (Symbol a : hessian(eq.n))
    for (Symbol b : hessian(eq.n)) q += diff(diff(eq.rhs, a), b) * xi_monomial(a) * xi_monomial(b);
  return q;
}

// Oracle for n = 2: G is minor-affine iff, as a polynomial in the Hessian,
// it lies in span{1, u_11, u_12, u_22, u_11 u_22 - u_12^2} over the
// lower-order coefficients.
bool minor_affine_oracle_n2(const EvolutionEquation& eq) {
  const std::vector<Symbol> h = hessian(2);
  const std::set<Symbol> vars(h.begin(), h.end());
  const auto coeffs = poly_coefficients(eq.rhs, vars);
  const Monomial m1122 = Monomial(jet({1, 1})) * Monomial(jet({2, 2}));
  const Monomial m1212(jet({1, 2}), 2);
  for (const auto& [m, c] : coeffs) {
    if (m.degree() <= 1 || m == m1122 || m == m1212) continue;
    if (!c.is_zero()) return false;
  }
  const Expr a = coeffs.count(m1122) ? coeffs.at(m1122) : Expr(0);
  const Expr b = coeffs.count(m1212) ? coeffs.at(m1212) : Expr(0);
  return (a + b).is_zero();
}

// G(H) -> G(P^T H P) for a 2x2 integer matrix P.
Expr congruence(const Expr& g, int p11, int p12, int p21, int p22) {
  const Expr h11(jet({1, 1})), h12(jet({1, 2})), h22(jet({2, 2}));
  const int p[2][2] = {{p11, p12}, {p21, p22}};
  const Expr h[2][2] = {{h11, h12}, {h12, h22}};
  auto entry = [&](int i, int j) {
    Expr s;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) s += Expr(p[a][i] * p[b][j]) * h[a][b];
    return s;
  };
  return substitute(g, {{jet({1, 1}), entry(0, 0)}, {jet({1, 2}), entry(0, 1)}, {jet({2, 2}), entry(1, 1)}});
}

const Expr xi1(xi(1));
const Expr xi2(xi(2));

}  // namespace

TEST_CASE("symbol form examples") {
  const SymbolForm heat = symbol_form(equation("u_xx"));
  REQUIRE(heat.g.size() == 1);
  CHECK(heat.g[0][0] == Expr(1));

  const EvolutionEquation det = equation("u_11*u_22 - u_12^2", 2, hessian_identity());
  const SymbolForm sd = symbol_form(det);
  CHECK(sd.g[0][0] == E("u_22", 2));
  CHECK(sd.g[0][1] == E("-u_12", 2));
  CHECK(sd.g[1][1] == E("u_11", 2));
  CHECK(substitute(sd.quadratic(), reference_bindings(det)) == xi1 * xi1 + xi2 * xi2);
  CHECK(sd.at(det) == RationalMatrix{{1, 0}, {0, 1}});

  CHECK(symbol_form(equation("u*u_xx")).g[0][0] == E("u"));
  // Off-diagonal halving: sigma equals the first epsilon-derivative.
  CHECK(symbol_form(equation("u_12", 2)).g[0][1] == Expr(Rational(1, 2)));
}

TEST_CASE("parabolicity examples") {
  CHECK(parabolicity_check(equation("u_xx")) == Parabolicity::StrictlyParabolic);
  CHECK(parabolicity_check(equation("u_xx^2")) == Parabolicity::WeaklyParabolic);
  CHECK(parabolicity_check(equation("-u_xx")) == Parabolicity::NotParabolic);
  CHECK(parabolicity_check(equation("u_11*u_22 - u_12^2", 2, hessian_identity())) ==
        Parabolicity::StrictlyParabolic);
  CHECK(parabolicity_check(equation("u_11*u_22 - u_12^2", 2)) == Parabolicity::WeaklyParabolic);
  CHECK(parabolicity_check(equation("u_11", 2)) == Parabolicity::WeaklyParabolic);
  CHECK(parabolicity_check(equation("u_11 - u_22", 2)) == Parabolicity::NotParabolic);
  CHECK(parabolicity_check(equation("u*u_xx", 1, {{Symbol::u(), 1}})) == Parabolicity::StrictlyParabolic);
  CHECK(std::string(to_string(Parabolicity::WeaklyParabolic)) == "weak");
}

TEST_CASE("determinant") {
  CHECK(determinant({{2, 1}, {1, 2}}) == 3);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

TEST_CASE("quartic form examples") {
  CHECK(quartic_form(equation("u_xx")).is_zero());
  CHECK(quartic_form(equation("u_xx^2")) == Expr(2) * xi1.pow(4));
  CHECK(quartic_form(equation("u_11*u_22 - u_12^2", 2)).is_zero());
  const Expr s = xi1 * xi1 + xi2 * xi2;
  CHECK(quartic_form(equation("u_11 + u_22 + (u_11 + u_22)^2", 2)) == Expr(2) * s * s);
}

TEST_CASE("minor-affinity examples") {
  CHECK(is_minor_affine(equation("u_xx")));
  CHECK(is_minor_affine(equation("u_11*u_22 - u_12^2", 2)));
  CHECK_FALSE(is_minor_affine(equation("u_11 + u_22 + (u_11 + u_22)^2", 2)));
  CHECK(is_minor_affine(equation("u_11*u_22*u_33 + u_1*(u_11*u_22 - u_12^2) + u_33", 3)) == false);
  CHECK(is_minor_affine(equation(
      "u_11*(u_22*u_33 - u_23^2) - u_12*(u_12*u_33 - u_13*u_23) + u_13*(u_12*u_23 - u_13*u_22)", 3)));
}

TEST_CASE("minor-basis oracle agrees on n = 2 examples") {
  const std::vector<std::string> cases{"u_11*u_22 - u_12^2", "u_11 + u_22 + u_11*u_22 - u_12^2",
                                       "u_11 + u_22 + (u_11 + u_22)^2", "u_11 + u_22 + u_11^2",
                                       "u*u_11 + u_1*u_22 + x1*(u_11*u_22 - u_12^2)", "u_12^2"};
  for (const auto& g : cases) {
    const EvolutionEquation eq = equation(g, 2);
    CAPTURE(g);
    CHECK(is_minor_affine(eq) == minor_affine_oracle_n2(eq));
  }
}

TEST_CASE("traceless residue examples") {
  CHECK(ma_traceless_residue(equation("u_11 + u_22", 2)).is_zero());

  const TracelessSplit lap2 = traceless_split(equation("u_11 + u_22 + (u_11 + u_22)^2", 2));
  CHECK(lap2.residue.is_zero());
  CHECK(lap2.cofactor == Expr(2) * (xi1 * xi1 + xi2 * xi2));

  CHECK_FALSE(ma_traceless_residue(equation("u_11 + u_22 + u_11^2", 2)).is_zero());
  CHECK_THROWS_AS(traceless_split(equation("u_xx")), Error);
  CHECK_THROWS_AS(traceless_split(equation("u_11", 2)), Error);
}

TEST_CASE("symbolic residue mode keeps jet dependence") {
  const EvolutionEquation eq = equation("u_11 + u_22 + (u_11 + u_22)^2", 2);
  const TracelessSplit split = traceless_split(eq, ResidueMode::Symbolic);
  CHECK(split.residue.is_zero());
  CHECK(split.sigma.contains_if([](Symbol s) { return s.is_jet(); }));
  CHECK_FALSE(ma_traceless_residue(equation("u_11 + u_22 + u_11^2", 2), ResidueMode::Symbolic).is_zero());
}

TEST_CASE("ma_classify examples") {
  const MAReport burgers = ma_classify(equation("u_xx + u*u_x"));
  CHECK(burgers.minor_affine);
  CHECK(burgers.n1_affine == std::optional<bool>(true));
  CHECK_FALSE(burgers.residue_vanishes.has_value());

  const MAReport nonaffine = ma_classify(equation("u_xx + u_xx^2"));
  CHECK(nonaffine.n1_affine == std::optional<bool>(false));
  CHECK_FALSE(nonaffine.minor_affine);

  const MAReport det = ma_classify(equation("u_11*u_22 - u_12^2", 2, hessian_identity()));
  CHECK(det.minor_affine);
  CHECK(det.residue_vanishes == std::optional<bool>(true));
  CHECK_FALSE(det.n1_affine.has_value());

  const MAReport both = ma_classify(equation("u_11 + u_22 + (u_11 + u_22)^2", 2));
  CHECK_FALSE(both.minor_affine);
  CHECK(both.residue_vanishes == std::optional<bool>(true));

  const MAReport singular = ma_classify(equation("u_11", 2));
  CHECK(singular.singular_symbol);
  CHECK_FALSE(singular.residue_vanishes.has_value());
}

TEST_CASE("property: quartic form matches the unordered-pair sum formula") {
  Gen g(0x9a7a0001);
  for (int k = 0; k < 20; ++k) {
    const int n = g.range(1, 3);
    std::vector<Symbol> vars = hessian(n);
    vars.push_back(Symbol::u());
    vars.push_back(jet({1}));
    vars.push_back(Symbol::base(1));
    const EvolutionEquation eq = make_equation(n, g.poly(vars, 5, 3));
    CHECK(quartic_form(eq) == quartic_by_sum(eq));
  }
}

TEST_CASE("property: minor-affinity is invariant under congruence") {
  Gen g(0x9a7a0002);
  const std::vector<std::string> base{"u_11 + u_22", "u_11*u_22 - u_12^2", "u_11^2 + u_22",
                                      "3*u_11 + u_12 + 2*u_22 + 5*(u_11*u_22 - u_12^2)", "(u_11 + u_22)^2",
                                      "u_12^2 - u_11", "u_11*u_12"};
  int checked = 0;
  for (int k = 0; k < 120; ++k) {
    int p[4];
    do {
      for (int& v : p) v = g.range(-3, 3);
    } while (p[0] * p[3] - p[1] * p[2] == 0);
    const std::string& src = base[static_cast<std::size_t>(k) % base.size()];
    const Expr gsrc = E(src, 2);
    const EvolutionEquation a = make_equation(2, gsrc);
    const EvolutionEquation b = make_equation(2, congruence(gsrc, p[0], p[1], p[2], p[3]));
    CAPTURE(src);
    CHECK(is_minor_affine(a) == is_minor_affine(b));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("property: minor-affine implies vanishing residue") {
  Gen g(0x9a7a0003);
  const std::vector<Symbol> low{Symbol::u(), jet({1}), jet({2}), Symbol::base(1)};
  int applied = 0;
  for (int k = 0; k < 120; ++k) {
    const bool affine = k % 2 == 0;
    Expr rhs = E("u_11 + u_22", 2) + g.poly(low, 2, 1);
    rhs += g.poly(low, 2, 1) * E("u_11*u_22 - u_12^2", 2);
    rhs += g.poly(low, 1, 1) * E("u_12", 2);
    if (!affine) rhs += Expr(g.coeff()) * E("u_22", 2).pow(2);
    const EvolutionEquation eq = make_equation(2, rhs);
    const MAReport r = ma_classify(eq);
    CHECK(r.minor_affine == affine);
    if (r.minor_affine && r.residue_vanishes.has_value()) {
      CHECK(*r.residue_vanishes);
      ++applied;
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("property: traceless split post-check") {
  const std::vector<std::pair<std::string, std::map<Symbol, Rational>>> cases{
      {"u_11 + u_22 + u_11^2", {}},
      {"u_11 + u_22 + (u_11 + u_22)^2", {}},
      {"u_11 + u_22 + u_11*u_22 - u_12^2", {}},
      {"u_11*u_22 - u_12^2", hessian_identity()},
      {"u_11 + 2*u_22 + u_12 + u_12^2 + u_11^3", {}},
      {"u_11 + u_22 + u_33 + u_11*u_22 + u_13^2", {}},
  };
  for (const auto& [src, ref] : cases) {
    const int n = src.find("u_33") != std::string::npos ? 3 : 2;
    const EvolutionEquation eq = equation(src, n, ref);
    for (ResidueMode mode : {ResidueMode::AtReference, ResidueMode::Symbolic}) {
      const TracelessSplit s = traceless_split(eq, mode);
      CAPTURE(src);
      CHECK((s.quartic - s.residue - s.sigma * s.cofactor).is_zero());
      CHECK(metric_trace(s.residue, s.inverse_symbol).is_zero());
    }
  }
}
