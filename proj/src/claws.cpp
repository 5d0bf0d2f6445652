#include "jetlaw/claws.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "jetlaw/errors.hpp"

namespace jetlaw {

namespace {

bool is_coordinate_or_jet(Symbol s) { return s.is_base() || s.is_jet(); }

// Runs fn(k) for k in [0, count) on a few worker threads. Each index is
// written by exactly one task, so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || count < 8) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [w, workers, count, &fn] {
      for (std::size_t k = w; k < count; k += workers) fn(k);
    }));
  for (auto& t : tasks) t.get();
}

// Splits a density that is linear in the unknowns into one coefficient per
// unknown.
std::vector<Expr> split_linear(const Expr& density, const std::vector<Symbol>& unknowns) {
  std::vector<Expr> parts(unknowns.size());
  for (const auto& [mono, coefficient] : poly_coefficients(density, [](Symbol s) { return s.is_unknown(); })) {
    if (mono.is_one()) {
      if (!coefficient.is_zero()) throw std::invalid_argument("density ansatz has a term free of unknowns");
      continue;
    }
    if (mono.factors().size() != 1 || mono.factors().front().second != 1)
      throw std::invalid_argument("density ansatz is not linear in its unknowns");
    const Symbol c = mono.factors().front().first;
    auto it = std::find(unknowns.begin(), unknowns.end(), c);
    if (it == unknowns.end()) throw std::invalid_argument("density ansatz uses an undeclared unknown");
    parts[static_cast<std::size_t>(it - unknowns.begin())] = coefficient;
  }
  return parts;
}

int ansatz_table_order(const Expr& density) { return std::max(jet_order(density) + 1, 1); }

// Descending complexity: jet order, jet weight, jet degree, then monomial order.
auto complexity_key(const Monomial& m) {
  int order = 0;
  int weight = 0;
  unsigned degree = 0;
  for (const auto& [s, e] : m.factors()) {
    if (!s.is_jet()) continue;
    const int o = s.multi_index().order();
    order = std::max(order, o);
    weight += o * static_cast<int>(e);
    degree += e;
  }
  return std::make_tuple(order, weight, degree);
}

}  // namespace

Ansatz generate_ansatz(const EvolutionEquation& eq, const AnsatzSpec& spec) {
  if (spec.max_jet_order < 0 || spec.jet_degree < 0 || spec.base_degree < 0)
    throw std::invalid_argument("ansatz bounds must be nonnegative");
  if (spec.max_jet_order > 2 && !spec.unsafe_order)
    throw Error(ErrorCode::OrderOverflow, "density order above 2 requires the unsafe-order override");
  std::vector<Symbol> base;
  for (int a = 0; a <= eq.n; ++a) base.push_back(Symbol::base(a));
  const auto base_monos = enumerate_monomials(base, spec.base_degree);
  const auto jet_monos = enumerate_monomials(spatial_jet_symbols(eq.n, spec.max_jet_order), spec.jet_degree);
  const std::size_t count = base_monos.size() * jet_monos.size();
  if (count > spec.max_monomials)
    throw Error(ErrorCode::AnsatzTooLarge, std::to_string(count) + " monomials exceed the guard of " +
                                               std::to_string(spec.max_monomials));
  Ansatz ansatz;
  for (const auto& j : jet_monos)
    for (const auto& b : base_monos) ansatz.monomials.push_back(j * b);
  std::sort(ansatz.monomials.begin(), ansatz.monomials.end());
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < ansatz.monomials.size(); ++k) {
    const Symbol c = Symbol::unknown(k + 1);
    ansatz.unknowns.push_back(c);
    terms.push_back({ansatz.monomials[k] * Monomial(c), Rational(1)});
  }
  ansatz.density = Expr(Polynomial::from_terms(std::move(terms)));
  return ansatz;
}

DeterminingSystem assemble_determining_system(const EvolutionEquation& eq, const Expr& density,
                                              const std::vector<Symbol>& unknowns) {
  const std::vector<Expr> parts = split_linear(density, unknowns);
  int order = 0;
  for (const auto& p : parts) order = std::max(order, ansatz_table_order(p));
  const ReplacementTable table(eq, order);

  std::vector<Expr> images(parts.size());
  parallel_for(parts.size(), [&](std::size_t k) {
    if (parts[k].is_zero()) return;
    images[k] = euler_operator(reduce_to_spatial(total_derivative(parts[k], 0), table));
  });

  std::map<Monomial, SparseRow> rows;
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [mono, c] : poly_coefficients(images[k], is_coordinate_or_jet)) {
      if (!c.is_constant())
        throw Error(ErrorCode::NotPolynomialIn, "determining equation coefficient is not a rational number");
      rows[mono].emplace_back(k, c.constant_value());
    }
  DeterminingSystem system;
  system.unknowns = unknowns;
  for (auto& [mono, row] : rows) {
    system.keys.push_back(mono);
    system.equations.push_back(std::move(row));
  }
  return system;
}

std::vector<std::vector<Rational>> solve_exact(const DeterminingSystem& system) {
  return null_space(system.equations, system.unknowns.size());
}

Expr characteristic(const Expr& density) { return euler_operator(density); }

int jacobi_potential_order(const ConservationLaw& law) { return std::max(jet_order(law.characteristic), 0); }

bool verify(const EvolutionEquation& eq, const ConservationLaw& law) {
  if (law.flux.size() != static_cast<std::size_t>(eq.n)) return false;
  const ReplacementTable table(eq, ansatz_table_order(law.density));
  Expr residual = reduce_to_spatial(total_derivative(law.density, 0), table);
  for (int i = 1; i <= eq.n; ++i) residual += total_derivative(law.flux[static_cast<std::size_t>(i - 1)], i);
  return residual.is_zero();
}

SearchResult find_conservation_laws(const EvolutionEquation& eq, const AnsatzSpec& spec,
                                    const SearchOptions& options) {
  SearchResult result;
  result.parabolicity = parabolicity_check(eq);
  if (result.parabolicity == Parabolicity::NotParabolic) {
    if (!options.force)
      throw Error(ErrorCode::NotParabolic, "symbol is not parabolic at the reference jet");
    result.warnings.push_back("symbol is not parabolic at the reference jet; search forced");
  } else if (result.parabolicity == Parabolicity::WeaklyParabolic) {
    result.warnings.push_back("symbol is degenerate (weakly parabolic) at the reference jet");
  }

  const Ansatz ansatz = generate_ansatz(eq, spec);
  result.ansatz_size = ansatz.monomials.size();
  const DeterminingSystem system = assemble_determining_system(eq, ansatz.density, ansatz.unknowns);
  const auto basis = solve_exact(system);
  result.null_space_dimension = basis.size();
  if (basis.empty()) return result;

  // Characteristic of each ansatz monomial.
  const std::size_t m = ansatz.monomials.size();
  std::vector<Expr> monomial_characteristics(m);
  parallel_for(m, [&](std::size_t k) {
    monomial_characteristics[k] = characteristic(monomial_expr(ansatz.monomials[k]));
  });

  // Rows [Q(v) | v] for each null vector v. Characteristic columns come
  // first, ordered by descending monomial, so a row echelon form separates
  // the trivial laws (no characteristic pivot) from a canonical basis of
  // characteristics with leading coefficient 1. Density columns follow in
  // descending complexity so trivial rows absorb the complicated monomials.
  std::vector<Polynomial> row_characteristics;
  std::vector<Monomial> q_columns;
  for (const auto& v : basis) {
    Polynomial q;
    for (std::size_t k = 0; k < m; ++k)
      if (v[k] != 0) q += monomial_characteristics[k].numerator() * (v[k] / monomial_characteristics[k].denominator().constant_value());
    for (const auto& t : q.terms()) q_columns.push_back(t.mono);
    row_characteristics.push_back(std::move(q));
  }
  std::sort(q_columns.begin(), q_columns.end(), std::greater<>());
  q_columns.erase(std::unique(q_columns.begin(), q_columns.end()), q_columns.end());
  const std::size_t nq = q_columns.size();

  std::vector<std::size_t> density_order(m);
  for (std::size_t k = 0; k < m; ++k) density_order[k] = k;
  std::stable_sort(density_order.begin(), density_order.end(), [&](std::size_t a, std::size_t b) {
    const auto ka = complexity_key(ansatz.monomials[a]);
    const auto kb = complexity_key(ansatz.monomials[b]);
    if (ka != kb) return ka > kb;
    return ansatz.monomials[a] > ansatz.monomials[b];
  });
  std::vector<std::size_t> density_column(m);
  for (std::size_t pos = 0; pos < m; ++pos) density_column[density_order[pos]] = nq + pos;

  RowEchelon echelon(nq + m);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    SparseRow row;
    for (const auto& t : row_characteristics[r].terms()) {
      const auto it = std::lower_bound(q_columns.begin(), q_columns.end(), t.mono, std::greater<>());
      row.emplace_back(static_cast<std::size_t>(it - q_columns.begin()), t.coef);
    }
    for (std::size_t k = 0; k < m; ++k)
      if (basis[r][k] != 0) row.emplace_back(density_column[k], basis[r][k]);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.insert(std::move(row));
  }
  echelon.reduce();

  const auto& pivots = echelon.pivot_rows();
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    if (it->first >= nq) continue;
    std::vector<Polynomial::Term> q_terms;
    std::vector<Polynomial::Term> t_terms;
    for (const auto& [col, value] : it->second) {
      if (col < nq)
        q_terms.push_back({q_columns[col], value});
      else
        t_terms.push_back({ansatz.monomials[density_order[col - nq]], value});
    }
    ConservationLaw law;
    law.density = Expr(Polynomial::from_terms(std::move(t_terms)));
    law.characteristic = Expr(Polynomial::from_terms(std::move(q_terms)));

    const ReplacementTable table(eq, ansatz_table_order(law.density));
    const Expr production = reduce_to_spatial(total_derivative(law.density, 0), table);
    try {
      law.flux = invert_divergence(-production, eq.n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInDivergenceImage) throw;
      law.flux_found = false;
      law.flux.clear();
      result.warnings.push_back(std::string(error_code_name(ErrorCode::FluxReconstructionFailed)) +
                                ": no flux within the default bounds for characteristic " +
                                to_string(law.characteristic, eq.n));
    }
    if (law.flux_found && !verify(eq, law))
      throw std::logic_error("reconstructed conservation law failed verification");
    result.laws.push_back(std::move(law));
  }
  return result;
}

CrossValidation cross_validate_ma(const EvolutionEquation& eq, const std::vector<ConservationLaw>& laws,
                                  ResidueMode mode) {
  CrossValidation out;
  if (laws.empty()) {
    out.detail = "no nontrivial laws";
    return out;
  }
  const MAReport report = ma_classify(eq, mode);
  if (eq.n == 1) {
    out.violation = !report.n1_affine.value_or(false);
    out.detail = out.violation ? "nontrivial law for an equation that is not affine in u_xx"
                               : "affine in u_xx";
    return out;
  }
  if (!report.residue_vanishes) {
    out.inconclusive = true;
    out.detail = "symbol singular at the reference jet; residue test not applicable";
    return out;
  }
  out.violation = !*report.residue_vanishes;
  out.detail = out.violation ? "nontrivial law but the traceless quartic residue is nonzero"
                             : "traceless quartic residue vanishes";
  return out;
}

}  // namespace jetlaw
