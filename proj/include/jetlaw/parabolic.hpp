#pragma once

#include <optional>
#include <vector>

#include "jetlaw/equation.hpp"
#include "jetlaw/expr.hpp"

namespace jetlaw {

using ExprMatrix = std::vector<std::vector<Expr>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Symmetric symbol matrix: g_ii = dG/du_ii and g_ij = (1/2) dG/du_ij for
// i != j, since u_ij with i < j is a single jet coordinate.
struct SymbolForm {
  int n = 1;
  ExprMatrix g;

  // sigma(xi) = sum_ij g_ij xi_i xi_j
  Expr quadratic() const;
  RationalMatrix at(const EvolutionEquation& eq) const;
};

SymbolForm symbol_form(const EvolutionEquation& eq);

enum class Parabolicity { StrictlyParabolic, WeaklyParabolic, NotParabolic };

const char* to_string(Parabolicity p);

// Certified at the reference 2-jet: strict iff every leading principal minor
// is positive, weak iff every principal minor is nonnegative.
Parabolicity parabolicity_check(const EvolutionEquation& eq);

Rational determinant(RationalMatrix m);

// q(xi) = d^2/deps^2 G(..., u_ij + eps xi_i xi_j, ...) at eps = 0.
Expr quartic_form(const EvolutionEquation& eq);

// True iff the quartic form vanishes identically, i.e. G is a combination of
// Hessian minors with coefficients of order <= 1.
bool is_minor_affine(const EvolutionEquation& eq);

enum class ResidueMode { AtReference, Symbolic };

// q = residue + sigma * cofactor with residue traceless for sigma.
struct TracelessSplit {
  Expr quartic;
  Expr sigma;
  Expr cofactor;
  Expr residue;
  ExprMatrix inverse_symbol;
};

// Throws PreconditionSpatialDim for n = 1 and SingularSymbol when the symbol
// is singular at the reference jet.
TracelessSplit traceless_split(const EvolutionEquation& eq, ResidueMode mode = ResidueMode::AtReference);
Expr ma_traceless_residue(const EvolutionEquation& eq, ResidueMode mode = ResidueMode::AtReference);

// sum_ij ginv_ij d^2 p / dxi_i dxi_j
Expr metric_trace(const Expr& p, const ExprMatrix& ginv);

struct MAReport {
  bool minor_affine = false;
  Expr quartic;
  std::optional<Expr> traceless_residue;
  std::optional<bool> residue_vanishes;  // n >= 2 with an invertible symbol
  std::optional<bool> n1_affine;         // n = 1 only
  bool singular_symbol = false;
};

MAReport ma_classify(const EvolutionEquation& eq, ResidueMode mode = ResidueMode::AtReference);

}  // namespace jetlaw
