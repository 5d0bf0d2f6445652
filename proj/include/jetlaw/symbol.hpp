#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace jetlaw {

inline constexpr int kMaxSpatialDim = 5;

// Symmetric spatial multi-index plus a power of the time direction. Only
// multiplicities are stored; spatial direction i (1-based) lives in slot i-1.
class MultiIndex {
 public:
  MultiIndex() = default;

  static MultiIndex spatial(std::initializer_list<int> directions);
  static MultiIndex from_counts(const std::array<std::uint8_t, kMaxSpatialDim>& counts, int time_power);

  int count(int direction) const { return counts_.at(static_cast<std::size_t>(direction - 1)); }
  int time_power() const { return time_; }
  int spatial_order() const;
  int order() const { return spatial_order() + time_; }
  bool is_spatial() const { return time_ == 0; }
  bool empty() const { return order() == 0; }
  // Highest spatial direction with a nonzero count, or 0 when there is none.
  int max_direction() const;

  const std::array<std::uint8_t, kMaxSpatialDim>& counts() const { return counts_; }

  // Appends direction a (0 = time, 1..n = space).
  MultiIndex plus(int a) const;
  // Removes one occurrence of direction a; a must be present.
  MultiIndex minus(int a) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::array<std::uint8_t, kMaxSpatialDim> counts_{};
  std::uint8_t time_ = 0;
};

enum class SymbolKind : std::uint8_t { BaseVar = 0, JetVar = 1, AnsatzUnknown = 2, AuxVar = 3 };

// A coordinate, jet coordinate or indeterminate. The packed key orders
// symbols as: base variables by index, jet variables by (order, time power,
// lexicographic spatial index), ansatz unknowns by id, auxiliaries by id.
class Symbol {
 public:
  constexpr Symbol() = default;

  static Symbol base(int a);
  static Symbol time() { return base(0); }
  static Symbol jet(const MultiIndex& index);
  static Symbol u() { return jet(MultiIndex{}); }
  static Symbol unknown(std::uint64_t id);
  static Symbol aux(std::uint64_t id);

  SymbolKind kind() const { return static_cast<SymbolKind>(key_ >> 62); }
  bool is_base() const { return kind() == SymbolKind::BaseVar; }
  bool is_jet() const { return kind() == SymbolKind::JetVar; }
  bool is_unknown() const { return kind() == SymbolKind::AnsatzUnknown; }
  bool is_aux() const { return kind() == SymbolKind::AuxVar; }

  int base_index() const;
  MultiIndex multi_index() const;
  std::uint64_t id() const;

  std::uint64_t key() const { return key_; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  explicit constexpr Symbol(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

// Well-known auxiliary ids: the perturbation parameter and the covector
// components xi_1..xi_n of the symbol and quartic forms.
inline constexpr std::uint64_t kEpsilonAuxId = 0;
inline Symbol xi(int i) { return Symbol::aux(static_cast<std::uint64_t>(i)); }
inline Symbol epsilon() { return Symbol::aux(kEpsilonAuxId); }
inline constexpr std::uint64_t kFluxAuxBase = 1000;

// Display name in the problem-file syntax for dimension n: t, x / x1.., u,
// u_xx / u_12; time jets render with a trailing t run (u_xt, u_12t).
std::string symbol_name(Symbol s, int n);

}  // namespace jetlaw
