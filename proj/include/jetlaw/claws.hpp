#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jetlaw/equation.hpp"
#include "jetlaw/expr.hpp"
#include "jetlaw/jets.hpp"
#include "jetlaw/linsolve.hpp"
#include "jetlaw/parabolic.hpp"

namespace jetlaw {

// Polynomial density ansatz over t, x^i and spatial jets up to
// max_jet_order. Orders above 2 are refused unless unsafe_order is set.
struct AnsatzSpec {
  int max_jet_order = 2;
  int jet_degree = 1;
  int base_degree = 0;
  bool unsafe_order = false;
  std::size_t max_monomials = 20000;
};

struct Ansatz {
  Expr density;                  // sum_k c_k m_k
  std::vector<Symbol> unknowns;  // c_1..c_m, in column order
  std::vector<Monomial> monomials;
};

Ansatz generate_ansatz(const EvolutionEquation& eq, const AnsatzSpec& spec);

// Linear homogeneous equations in the ansatz unknowns, one per monomial of
// the Euler operator applied to the reduced time derivative of the density.
struct DeterminingSystem {
  std::vector<Symbol> unknowns;
  std::vector<Monomial> keys;  // monomial each equation was read from
  std::vector<SparseRow> equations;
};

DeterminingSystem assemble_determining_system(const EvolutionEquation& eq, const Expr& density,
                                              const std::vector<Symbol>& unknowns);

std::vector<std::vector<Rational>> solve_exact(const DeterminingSystem& system);

// D_t T + sum_i D_i X^i = 0 on solutions.
struct ConservationLaw {
  Expr density;
  std::vector<Expr> flux;
  Expr characteristic;
  bool flux_found = true;
};

struct SearchOptions {
  bool force = false;  // search even when the symbol is not parabolic
};

struct SearchResult {
  Parabolicity parabolicity = Parabolicity::StrictlyParabolic;
  std::vector<ConservationLaw> laws;
  std::vector<std::string> warnings;
  std::size_t ansatz_size = 0;
  std::size_t null_space_dimension = 0;
};

// Throws NotParabolic when the symbol is not parabolic at the reference jet
// and options.force is off.
SearchResult find_conservation_laws(const EvolutionEquation& eq, const AnsatzSpec& spec,
                                    const SearchOptions& options = {});

bool verify(const EvolutionEquation& eq, const ConservationLaw& law);

// Q = E(T)
Expr characteristic(const Expr& density);
// Largest spatial jet order in the characteristic (0 when it has none).
int jacobi_potential_order(const ConservationLaw& law);

struct CrossValidation {
  bool violation = false;
  bool inconclusive = false;
  std::string detail;
};

// A nontrivial law must come with a Monge-Ampere verdict; anything else is
// reported as a violation.
CrossValidation cross_validate_ma(const EvolutionEquation& eq, const std::vector<ConservationLaw>& laws,
                                  ResidueMode mode = ResidueMode::AtReference);

}  // namespace jetlaw
