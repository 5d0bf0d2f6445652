#include "jetlaw/jets.hpp"

#include <algorithm>
#include <stdexcept>

#include "jetlaw/errors.hpp"
#include "jetlaw/linsolve.hpp"

namespace jetlaw {

Polynomial total_derivative(const Polynomial& p, int a) {
  const Symbol coordinate = Symbol::base(a);
  std::vector<Polynomial::Term> out;
  out.reserve(p.size() * 2);
  for (const auto& t : p.terms()) {
    for (const auto& [s, e] : t.mono.factors()) {
      if (s == coordinate) {
        out.push_back({t.mono.with_exponent(s, e - 1), t.coef * e});
      } else if (s.is_jet()) {
        const Symbol next = Symbol::jet(s.multi_index().plus(a));
        Monomial m = t.mono.with_exponent(s, e - 1) * Monomial(next);
        out.push_back({std::move(m), t.coef * e});
      }
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Expr total_derivative(const Expr& e, int a) {
  if (e.is_polynomial()) return Expr(total_derivative(e.numerator(), a));
  return derivative_of_quotient(e, total_derivative(e.numerator(), a), total_derivative(e.denominator(), a));
}

Expr iterated_total_derivative(const Expr& e, const MultiIndex& index) {
  Expr out = e;
  for (int i = 1; i <= kMaxSpatialDim; ++i)
    for (int k = 0; k < index.count(i); ++k) {
      if (out.is_zero()) return out;
      out = total_derivative(out, i);
    }
  for (int k = 0; k < index.time_power(); ++k) {
    if (out.is_zero()) return out;
    out = total_derivative(out, 0);
  }
  return out;
}

int jet_order(const Expr& e) {
  int order = -1;
  for (Symbol s : e.symbols())
    if (s.is_jet()) order = std::max(order, s.multi_index().order());
  return order;
}

bool has_time_jets(const Expr& e) {
  return e.contains_if([](Symbol s) { return s.is_jet() && s.multi_index().time_power() > 0; });
}

namespace {

void spatial_indices(int n, int remaining, int first_direction, MultiIndex current,
                     std::vector<MultiIndex>& out) {
  out.push_back(current);
  if (remaining == 0) return;
  for (int a = first_direction; a <= n; ++a)
    spatial_indices(n, remaining - 1, a, current.plus(a), out);
}

void enumerate(const std::vector<Symbol>& vars, std::size_t pos, int degree_left,
               const std::function<int(Symbol)>& weight, std::optional<int> weight_left,
               std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    out.push_back(Monomial::from_factors(current));
    return;
  }
  const Symbol s = vars[pos];
  const int w = weight ? weight(s) : 0;
  for (int e = 0; e <= degree_left; ++e) {
    std::optional<int> left = weight_left;
    if (left) {
      *left -= w * e;
      if (*left < 0) break;
    }
    if (e > 0) current.emplace_back(s, static_cast<unsigned>(e));
    enumerate(vars, pos + 1, degree_left - e, weight, left, current, out);
    if (e > 0) current.pop_back();
  }
}

}  // namespace

std::vector<Symbol> spatial_jet_symbols(int n, int max_order) {
  std::vector<MultiIndex> indices;
  if (max_order >= 0) spatial_indices(n, max_order, 1, MultiIndex{}, indices);
  std::vector<Symbol> out;
  out.reserve(indices.size());
  for (const auto& m : indices) out.push_back(Symbol::jet(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> enumerate_monomials(const std::vector<Symbol>& vars, int max_degree,
                                          const std::function<int(Symbol)>& weight,
                                          std::optional<int> max_weight) {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  std::vector<Monomial::Factor> current;
  enumerate(vars, 0, max_degree, weight, max_weight, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

ReplacementTable::ReplacementTable(const EvolutionEquation& eq, int max_order, int guard)
    : n_(eq.n), rhs_(eq.rhs), max_order_(max_order), guard_(guard) {
  if (max_order < 1) throw std::invalid_argument("replacement table needs max_order >= 1");
  if (max_order > guard)
    throw Error(ErrorCode::OrderOverflow, "requested order " + std::to_string(max_order) +
                                              " exceeds the guard " + std::to_string(guard));
}

const Expr& ReplacementTable::entry(const MultiIndex& index) const {
  if (index.time_power() < 1) throw std::invalid_argument("replacement entries need a time direction");
  if (index.order() > max_order_)
    throw Error(ErrorCode::TableTooShallow, "time jet of order " + std::to_string(index.order()) +
                                                " exceeds table order " + std::to_string(max_order_));
  return compute(index);
}

const Expr& ReplacementTable::compute(const MultiIndex& index) const {
  if (index.order() > guard_)
    throw Error(ErrorCode::OrderOverflow, "elimination needs order " + std::to_string(index.order()) +
                                              " beyond the guard " + std::to_string(guard_));
  const Symbol key = Symbol::jet(index);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Expr value;
  const int a = index.max_direction();
  if (a > 0) {
    value = total_derivative(compute(index.minus(a)), a);
  } else if (index.time_power() == 1) {
    value = rhs_;
  } else {
    const Expr dt = total_derivative(compute(index.minus(0)), 0);
    std::map<Symbol, Expr> bindings;
    for (Symbol s : dt.symbols())
      if (s.is_jet() && s.multi_index().time_power() > 0) bindings.emplace(s, compute(s.multi_index()));
    value = substitute(dt, bindings);
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(value)).first->second;
}

std::vector<MultiIndex> ReplacementTable::cached_indices() const {
  std::vector<MultiIndex> out;
  std::lock_guard lock(mutex_);
  for (const auto& kv : cache_) {
    const MultiIndex m = kv.first.multi_index();
    if (m.order() <= max_order_) out.push_back(m);
  }
  return out;
}

void populate(const ReplacementTable& table) {
  std::vector<MultiIndex> spatial;
  spatial_indices(table.n(), table.max_order() - 1, 1, MultiIndex{}, spatial);
  for (const auto& s : spatial)
    for (int t = 1; s.spatial_order() + t <= table.max_order(); ++t) {
      MultiIndex index = s;
      for (int k = 0; k < t; ++k) index = index.plus(0);
      table.entry(index);
    }
}

Expr reduce_to_spatial(const Expr& e, const ReplacementTable& table) {
  std::map<Symbol, Expr> bindings;
  for (Symbol s : e.symbols())
    if (s.is_jet() && s.multi_index().time_power() > 0) bindings.emplace(s, table.entry(s.multi_index()));
  return substitute(e, bindings);
}

Expr euler_operator(const Expr& e) {
  if (has_time_jets(e)) throw Error(ErrorCode::TimeJetPresent, "Euler operator applies to spatial expressions only");
  Expr out;
  for (Symbol s : e.symbols()) {
    if (!s.is_jet()) continue;
    const MultiIndex index = s.multi_index();
    Expr term = iterated_total_derivative(diff(e, s), index);
    if (index.order() % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

namespace {

struct PolyStats {
  int jet_order = -1;
  int jet_degree = 0;
  int weight = 0;
  int base_degree = 0;
};

PolyStats stats_of(const Polynomial& p) {
  PolyStats st;
  for (const auto& t : p.terms()) {
    int deg = 0;
    int weight = 0;
    int base = 0;
    for (const auto& [s, e] : t.mono.factors()) {
      const int exp = static_cast<int>(e);
      if (s.is_jet()) {
        const int order = s.multi_index().order();
        st.jet_order = std::max(st.jet_order, order);
        deg += exp;
        weight += order * exp;
      } else if (s.is_base()) {
        base += exp;
      }
    }
    st.jet_degree = std::max(st.jet_degree, deg);
    st.weight = std::max(st.weight, weight);
    st.base_degree = std::max(st.base_degree, base);
  }
  return st;
}

std::optional<std::vector<Polynomial>> try_invert(const Polynomial& r, int n, const FluxBounds& b) {
  std::vector<Symbol> vars;
  for (int a = 0; a <= n; ++a) vars.push_back(Symbol::base(a));
  const auto jets = spatial_jet_symbols(n, b.max_jet_order);
  vars.insert(vars.end(), jets.begin(), jets.end());

  std::vector<Monomial> monomials;
  {
    const auto base_monos = enumerate_monomials({vars.begin(), vars.begin() + n + 1}, b.base_degree);
    const auto jet_monos = enumerate_monomials(
        jets, b.jet_degree, [](Symbol s) { return s.multi_index().order(); }, b.max_weight);
    for (const auto& jm : jet_monos)
      for (const auto& bm : base_monos) monomials.push_back(jm * bm);
    std::sort(monomials.begin(), monomials.end());
  }
  const std::size_t per_flux = monomials.size();
  const std::size_t columns = per_flux * static_cast<std::size_t>(n);

  std::map<Monomial, SparseRow> rows;
  for (int i = 1; i <= n; ++i)
    for (std::size_t k = 0; k < per_flux; ++k) {
      const std::size_t col = static_cast<std::size_t>(i - 1) * per_flux + k;
      const Polynomial d = total_derivative(Polynomial(monomials[k], Rational(1)), i);
      for (const auto& t : d.terms()) rows[t.mono].emplace_back(col, t.coef);
    }
  std::map<Monomial, Rational> target;
  for (const auto& t : r.terms()) {
    rows[t.mono];
    target.emplace(t.mono, t.coef);
  }

  std::vector<SparseRow> matrix;
  std::vector<Rational> rhs;
  matrix.reserve(rows.size());
  for (auto& [mono, row] : rows) {
    auto it = target.find(mono);
    matrix.push_back(std::move(row));
    rhs.push_back(it == target.end() ? Rational(0) : it->second);
  }
  auto solution = solve_particular(matrix, rhs, columns);
  if (!solution) return std::nullopt;

  std::vector<Polynomial> fluxes;
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < per_flux; ++k) {
      const Rational& c = (*solution)[static_cast<std::size_t>(i) * per_flux + k];
      if (c != 0) terms.push_back({monomials[k], c});
    }
    fluxes.push_back(Polynomial::from_terms(std::move(terms)));
  }
  return fluxes;
}

std::vector<FluxBounds> default_ladder(const Polynomial& r) {
  const PolyStats st = stats_of(r);
  const int order = std::max(st.jet_order, 0);
  std::vector<FluxBounds> ladder{
      {std::max(order - 1, 0), st.jet_degree, st.base_degree + 1, std::max(st.weight - 1, 0)},
      {order, st.jet_degree, st.base_degree + 1, st.weight},
      {order, st.jet_degree, st.base_degree + 1, std::nullopt},
  };
  return ladder;
}

}  // namespace

std::vector<Expr> invert_divergence(const Expr& r, int n, std::optional<FluxBounds> bounds) {
  if (n < 1 || n > kMaxSpatialDim) throw std::invalid_argument("spatial dimension out of range");
  if (has_time_jets(r)) throw Error(ErrorCode::TimeJetPresent, "divergence inversion needs a spatial expression");
  if (!r.is_polynomial()) throw Error(ErrorCode::NotPolynomialIn, "divergence inversion needs a polynomial");
  std::vector<Expr> fluxes(static_cast<std::size_t>(n));
  if (r.is_zero()) return fluxes;

  // Other symbols act as parameters: invert each parameter coefficient.
  const auto is_param = [](Symbol s) { return !s.is_base() && !s.is_jet(); };
  for (const auto& [param, coefficient] : poly_coefficients(r, is_param)) {
    const Polynomial part = coefficient.numerator();
    std::optional<std::vector<Polynomial>> found;
    const auto ladder = bounds ? std::vector<FluxBounds>{*bounds} : default_ladder(part);
    for (const auto& b : ladder) {
      found = try_invert(part, n, b);
      if (found) break;
    }
    if (!found)
      throw Error(ErrorCode::NotInDivergenceImage, "no polynomial flux within the degree bounds");
    for (int i = 0; i < n; ++i)
      fluxes[static_cast<std::size_t>(i)] += Expr((*found)[static_cast<std::size_t>(i)]) * monomial_expr(param);
  }
  return fluxes;
}

namespace {

long long binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  long long out = 1;
  for (long long k = 1; k <= b; ++k) out = out * (a - b + k) / k;
  return out;
}

}  // namespace

long long tableau_dimension(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("tableau_dimension needs n >= 1, r >= 0");
  long long total = 0;
  for (int s = 0; s <= 2 + r; ++s) {
    total += binomial(n + s - 1, s);
    if (s >= 2) total -= binomial(n + s - 3, s - 2);
  }
  return total;
}

int parabolic_system_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension needs n >= 1");
  return 2 * n + 2 + (n + 1) * (n + 2) / 2;
}

int deprolongation_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension needs n >= 1");
  return 2 * n + 3;
}

}  // namespace jetlaw
