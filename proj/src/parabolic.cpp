#include "jetlaw/parabolic.hpp"

#include <stdexcept>

#include "jetlaw/errors.hpp"

namespace jetlaw {

namespace {

Symbol hessian(int i, int j) { return Symbol::jet(MultiIndex::spatial({i, j})); }

// Gauss-Jordan inverse over the field of rational functions; nullopt when
// singular.
std::optional<ExprMatrix> invert(ExprMatrix a) {
  const std::size_t n = a.size();
  ExprMatrix inv(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Expr scale = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= scale;
      inv[col][k] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Expr f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

std::optional<std::vector<Expr>> solve_square(ExprMatrix a, std::vector<Expr> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Expr f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Expr> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Expr evaluate_at_reference(const Expr& e, const EvolutionEquation& eq) {
  return substitute(e, reference_bindings(eq));
}

bool is_xi(Symbol s) { return s.is_aux() && s.id() >= 1 && s.id() <= kMaxSpatialDim; }

}  // namespace

Expr SymbolForm::quadratic() const {
  Expr out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Expr(xi(i + 1)) * Expr(xi(j + 1));
  return out;
}

RationalMatrix SymbolForm::at(const EvolutionEquation& eq) const {
  RationalMatrix out(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      const Expr v = evaluate_at_reference(g[i][j], eq);
      if (!v.is_constant()) throw std::logic_error("reference jet does not bind every symbol of the symbol matrix");
      out[i][j] = v.constant_value();
    }
  return out;
}

SymbolForm symbol_form(const EvolutionEquation& eq) {
  SymbolForm form;
  form.n = eq.n;
  form.g.assign(static_cast<std::size_t>(eq.n), std::vector<Expr>(static_cast<std::size_t>(eq.n)));
  for (int i = 1; i <= eq.n; ++i)
    for (int j = i; j <= eq.n; ++j) {
      Expr d = diff(eq.rhs, hessian(i, j));
      if (i != j) d *= Expr(Rational(1, 2));
      form.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = d;
      form.g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = d;
    }
  return form;
}

const char* to_string(Parabolicity p) {
  switch (p) {
    case Parabolicity::StrictlyParabolic: return "strict";
    case Parabolicity::WeaklyParabolic: return "weak";
    case Parabolicity::NotParabolic: return "not_parabolic";
  }
  return "unknown";
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

Parabolicity parabolicity_check(const EvolutionEquation& eq) {
  const RationalMatrix g = symbol_form(eq).at(eq);
  const std::size_t n = g.size();
  auto minor = [&g](const std::vector<std::size_t>& rows) {
    RationalMatrix sub(rows.size(), std::vector<Rational>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) sub[i][j] = g[rows[i]][rows[j]];
    return determinant(std::move(sub));
  };
  bool strict = true;
  for (std::size_t k = 1; k <= n && strict; ++k) {
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    strict = minor(rows) > 0;
  }
  if (strict) return Parabolicity::StrictlyParabolic;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) rows.push_back(i);
    if (minor(rows) < 0) return Parabolicity::NotParabolic;
  }
  return Parabolicity::WeaklyParabolic;
}

Expr quartic_form(const EvolutionEquation& eq) {
  const Expr eps(epsilon());
  std::map<Symbol, Expr> shift;
  for (int i = 1; i <= eq.n; ++i)
    for (int j = i; j <= eq.n; ++j)
      shift.emplace(hessian(i, j), Expr(hessian(i, j)) + eps * Expr(xi(i)) * Expr(xi(j)));
  const Expr shifted = substitute(eq.rhs, shift);
  const Expr second = diff(diff(shifted, epsilon()), epsilon());
  return substitute(second, {{epsilon(), Expr(0)}});
}

bool is_minor_affine(const EvolutionEquation& eq) { return quartic_form(eq).is_zero(); }

Expr metric_trace(const Expr& p, const ExprMatrix& ginv) {
  Expr out;
  for (std::size_t i = 0; i < ginv.size(); ++i)
    for (std::size_t j = 0; j < ginv.size(); ++j) {
      if (ginv[i][j].is_zero()) continue;
      const Symbol xi_i = xi(static_cast<int>(i) + 1);
      const Symbol xi_j = xi(static_cast<int>(j) + 1);
      out += ginv[i][j] * diff(diff(p, xi_i), xi_j);
    }
  return out;
}

TracelessSplit traceless_split(const EvolutionEquation& eq, ResidueMode mode) {
  if (eq.n < 2) throw Error(ErrorCode::PreconditionSpatialDim, "the traceless residue needs n >= 2");
  const SymbolForm form = symbol_form(eq);
  if (determinant(form.at(eq)) == 0)
    throw Error(ErrorCode::SingularSymbol, "symbol matrix is singular at the reference jet");

  TracelessSplit split;
  ExprMatrix g = form.g;
  split.quartic = quartic_form(eq);
  if (mode == ResidueMode::AtReference) {
    for (auto& row : g)
      for (auto& v : row) v = evaluate_at_reference(v, eq);
    split.quartic = evaluate_at_reference(split.quartic, eq);
  }
  SymbolForm evaluated{eq.n, g};
  split.sigma = evaluated.quadratic();
  auto inverse = invert(g);
  if (!inverse) throw Error(ErrorCode::SingularSymbol, "symbol matrix is not invertible");
  split.inverse_symbol = *inverse;

  // Unknown cofactor h = sum_k h_k b_k over the quadratic basis b_k; the
  // trace equations L(sigma h) = L(q) are matched coefficient-wise.
  std::vector<Monomial> basis;
  for (int i = 1; i <= eq.n; ++i)
    for (int j = i; j <= eq.n; ++j) basis.push_back(Monomial(xi(i)) * Monomial(xi(j)));
  const std::size_t m = basis.size();
  ExprMatrix a(m, std::vector<Expr>(m));
  std::vector<Expr> b(m);
  auto row_of = [&basis](const Monomial& mono) {
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (basis[r] == mono) return r;
    throw std::logic_error("trace of a quartic is not quadratic in xi");
  };
  for (std::size_t k = 0; k < m; ++k) {
    const Expr image = metric_trace(split.sigma * monomial_expr(basis[k]), split.inverse_symbol);
    for (const auto& [mono, c] : poly_coefficients(image, is_xi)) a[row_of(mono)][k] = c;
  }
  for (const auto& [mono, c] : poly_coefficients(metric_trace(split.quartic, split.inverse_symbol), is_xi))
    b[row_of(mono)] = c;
  auto h = solve_square(a, b);
  if (!h) throw Error(ErrorCode::SingularSymbol, "trace equations are degenerate");
  for (std::size_t k = 0; k < m; ++k) split.cofactor += (*h)[k] * monomial_expr(basis[k]);
  split.residue = split.quartic - split.sigma * split.cofactor;
  return split;
}

Expr ma_traceless_residue(const EvolutionEquation& eq, ResidueMode mode) {
  return traceless_split(eq, mode).residue;
}

MAReport ma_classify(const EvolutionEquation& eq, ResidueMode mode) {
  MAReport report;
  report.quartic = quartic_form(eq);
  report.minor_affine = report.quartic.is_zero();
  if (eq.n == 1) {
    const Symbol uxx = hessian(1, 1);
    report.n1_affine = diff(diff(eq.rhs, uxx), uxx).is_zero();
    return report;
  }
  try {
    report.traceless_residue = ma_traceless_residue(eq, mode);
    report.residue_vanishes = report.traceless_residue->is_zero();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularSymbol) throw;
    report.singular_symbol = true;
  }
  return report;
}

}  // namespace jetlaw
