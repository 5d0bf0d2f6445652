#include "jetlaw/symbol.hpp"

#include <stdexcept>

#include "jetlaw/errors.hpp"

namespace jetlaw {

namespace {

constexpr std::uint64_t kKindShift = 62;
constexpr std::uint64_t kPayloadMask = (std::uint64_t{1} << kKindShift) - 1;
constexpr int kOrderShift = 54;
constexpr int kTimeShift = 46;

constexpr int count_shift(int slot) { return kTimeShift - 8 * (slot + 1); }

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroExpr: return "DivisionByZeroExpr";
    case ErrorCode::NotPolynomialIn: return "NotPolynomialIn";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::TableTooShallow: return "TableTooShallow";
    case ErrorCode::TimeJetPresent: return "TimeJetPresent";
    case ErrorCode::NotInDivergenceImage: return "NotInDivergenceImage";
    case ErrorCode::PreconditionSpatialDim: return "PreconditionSpatialDim";
    case ErrorCode::SingularSymbol: return "SingularSymbol";
    case ErrorCode::AnsatzTooLarge: return "AnsatzTooLarge";
    case ErrorCode::FluxReconstructionFailed: return "FluxReconstructionFailed";
    case ErrorCode::InvalidEquation: return "InvalidEquation";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TimeDerivativeOnRHS: return "TimeDerivativeOnRHS";
  }
  return "Unknown";
}

ParseError::ParseError(ErrorCode code, int line, int column, std::vector<std::string> expected,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

MultiIndex MultiIndex::spatial(std::initializer_list<int> directions) {
  MultiIndex m;
  for (int d : directions) m = m.plus(d);
  return m;
}

MultiIndex MultiIndex::from_counts(const std::array<std::uint8_t, kMaxSpatialDim>& counts,
                                   int time_power) {
  MultiIndex m;
  m.counts_ = counts;
  if (time_power < 0 || time_power > 255) throw std::out_of_range("time power out of range");
  m.time_ = static_cast<std::uint8_t>(time_power);
  return m;
}

int MultiIndex::spatial_order() const {
  int s = 0;
  for (auto c : counts_) s += c;
  return s;
}

int MultiIndex::max_direction() const {
  for (int i = kMaxSpatialDim; i >= 1; --i)
    if (counts_[static_cast<std::size_t>(i - 1)] != 0) return i;
  return 0;
}

MultiIndex MultiIndex::plus(int a) const {
  MultiIndex m = *this;
  if (a == 0) {
    if (m.time_ == 255) throw std::out_of_range("time power overflow");
    ++m.time_;
    return m;
  }
  if (a < 1 || a > kMaxSpatialDim) throw std::out_of_range("direction out of range");
  auto& c = m.counts_[static_cast<std::size_t>(a - 1)];
  if (c == 255) throw std::out_of_range("multi-index overflow");
  ++c;
  return m;
}

MultiIndex MultiIndex::minus(int a) const {
  MultiIndex m = *this;
  if (a == 0) {
    if (m.time_ == 0) throw std::logic_error("no time direction to remove");
    --m.time_;
    return m;
  }
  auto& c = m.counts_.at(static_cast<std::size_t>(a - 1));
  if (c == 0) throw std::logic_error("direction not present in multi-index");
  --c;
  return m;
}

Symbol Symbol::base(int a) {
  if (a < 0 || a > kMaxSpatialDim) throw std::out_of_range("base variable index out of range");
  return Symbol(static_cast<std::uint64_t>(a));
}

Symbol Symbol::jet(const MultiIndex& index) {
  std::uint64_t key = std::uint64_t{1} << kKindShift;
  key |= static_cast<std::uint64_t>(index.order()) << kOrderShift;
  key |= static_cast<std::uint64_t>(index.time_power()) << kTimeShift;
  for (int slot = 0; slot < kMaxSpatialDim; ++slot) {
    const auto c = index.counts()[static_cast<std::size_t>(slot)];
    key |= static_cast<std::uint64_t>(255 - c) << count_shift(slot);
  }
  return Symbol(key);
}

Symbol Symbol::unknown(std::uint64_t id) {
  if (id > kPayloadMask) throw std::out_of_range("unknown id too large");
  return Symbol((std::uint64_t{2} << kKindShift) | id);
}

Symbol Symbol::aux(std::uint64_t id) {
  if (id > kPayloadMask) throw std::out_of_range("aux id too large");
  return Symbol((std::uint64_t{3} << kKindShift) | id);
}

int Symbol::base_index() const {
  if (!is_base()) throw std::logic_error("not a base variable");
  return static_cast<int>(key_ & kPayloadMask);
}

MultiIndex Symbol::multi_index() const {
  if (!is_jet()) throw std::logic_error("not a jet variable");
  std::array<std::uint8_t, kMaxSpatialDim> counts{};
  for (int slot = 0; slot < kMaxSpatialDim; ++slot)
    counts[static_cast<std::size_t>(slot)] =
        static_cast<std::uint8_t>(255 - ((key_ >> count_shift(slot)) & 0xff));
  return MultiIndex::from_counts(counts, static_cast<int>((key_ >> kTimeShift) & 0xff));
}

std::uint64_t Symbol::id() const {
  if (is_base() || is_jet()) throw std::logic_error("symbol has no id");
  return key_ & kPayloadMask;
}

std::string symbol_name(Symbol s, int n) {
  switch (s.kind()) {
    case SymbolKind::BaseVar: {
      const int a = s.base_index();
      if (a == 0) return "t";
      if (n == 1 && a == 1) return "x";
      return "x" + std::to_string(a);
    }
    case SymbolKind::JetVar: {
      const MultiIndex m = s.multi_index();
      if (m.empty()) return "u";
      std::string name = "u_";
      const bool alias = n == 1 && m.max_direction() <= 1;
      for (int i = 1; i <= kMaxSpatialDim; ++i)
        for (int k = 0; k < m.count(i); ++k) name += alias ? 'x' : static_cast<char>('0' + i);
      name.append(static_cast<std::size_t>(m.time_power()), 't');
      return name;
    }
    case SymbolKind::AnsatzUnknown:
      return "c" + std::to_string(s.id());
    case SymbolKind::AuxVar: {
      const auto id = s.id();
      if (id == kEpsilonAuxId) return "eps";
      if (id <= static_cast<std::uint64_t>(kMaxSpatialDim)) return "xi" + std::to_string(id);
      if (id >= kFluxAuxBase) return "d" + std::to_string(id - kFluxAuxBase);
      return "a" + std::to_string(id);
    }
  }
  return "?";
}

}  // namespace jetlaw
