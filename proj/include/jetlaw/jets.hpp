#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "jetlaw/equation.hpp"
#include "jetlaw/expr.hpp"

namespace jetlaw {

// D_a = d/dx^a + sum_J u_{Ja} d/du_J, with a = 0 the time direction.
Expr total_derivative(const Expr& e, int a);
Polynomial total_derivative(const Polynomial& p, int a);

// Applies D over every direction of index, spatial ascending then time.
Expr iterated_total_derivative(const Expr& e, const MultiIndex& index);

// Largest jet order occurring in e, or -1 when e has no jet variable.
int jet_order(const Expr& e);
bool has_time_jets(const Expr& e);

// Jet symbols u_I with I spatial and |I| <= max_order, in symbol order.
std::vector<Symbol> spatial_jet_symbols(int n, int max_order);

// All monomials in vars of total degree <= max_degree whose weight (sum of
// weight(s) * exponent) does not exceed max_weight, sorted ascending.
std::vector<Monomial> enumerate_monomials(const std::vector<Symbol>& vars, int max_degree,
                                          const std::function<int(Symbol)>& weight = {},
                                          std::optional<int> max_weight = std::nullopt);

// Memoized elimination of time jets: entry (I, t) is D_I D_0^{t-1} G with
// every intermediate time jet replaced. Entries are computed lazily and may
// be requested concurrently.
class ReplacementTable {
 public:
  static constexpr int kDefaultGuard = 12;

  // Throws OrderOverflow when max_order exceeds the guard.
  ReplacementTable(const EvolutionEquation& eq, int max_order, int guard = kDefaultGuard);

  ReplacementTable(const ReplacementTable&) = delete;
  ReplacementTable& operator=(const ReplacementTable&) = delete;

  int n() const { return n_; }
  int max_order() const { return max_order_; }

  // Entry for a multi-index with time power >= 1; throws TableTooShallow
  // beyond max_order.
  const Expr& entry(const MultiIndex& index) const;

  // Cached entries of order <= max_order.
  std::vector<MultiIndex> cached_indices() const;

 private:
  const Expr& compute(const MultiIndex& index) const;

  int n_;
  Expr rhs_;
  int max_order_;
  int guard_;
  mutable std::mutex mutex_;
  mutable std::map<Symbol, Expr> cache_;
};

// Eagerly populates every entry of order <= max_order.
void populate(const ReplacementTable& table);

// Replaces every time jet by its table entry.
Expr reduce_to_spatial(const Expr& e, const ReplacementTable& table);

// Spatial variational derivative sum_I (-1)^|I| D_I (de/du_I).
// Throws TimeJetPresent when e contains a time jet.
Expr euler_operator(const Expr& e);

struct FluxBounds {
  int max_jet_order = 0;
  int jet_degree = 0;
  int base_degree = 0;
  std::optional<int> max_weight;  // sum of jet orders in a flux monomial
};

// Fluxes X^1..X^n with sum_i D_i X^i = r, found by an undetermined
// coefficient ansatz. Without explicit bounds, a short ladder of bounds
// derived from r is tried. Throws NotInDivergenceImage.
std::vector<Expr> invert_divergence(const Expr& r, int n, std::optional<FluxBounds> bounds = std::nullopt);

// Dimension of the r-th prolonged tableau: sum over s <= 2 + r of the
// dimension of traceless symmetric s-tensors on R^n.
long long tableau_dimension(int n, int r);

// 2n + 2 + (n+1)(n+2)/2
int parabolic_system_dimension(int n);
// 2n + 3
int deprolongation_dimension(int n);

}  // namespace jetlaw
