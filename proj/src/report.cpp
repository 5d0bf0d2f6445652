#include "jetlaw/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "jetlaw/claws.hpp"
#include "jetlaw/errors.hpp"
#include "jetlaw/jets.hpp"
#include "jetlaw/parabolic.hpp"

namespace jetlaw {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kDefaultJetDegree = 1;
constexpr int kDefaultBaseDegree = 0;
constexpr int kDefaultOrder = 2;

Report header(const ProblemFile& file) {
  Report r;
  r["schema_version"] = kSchemaVersion;
  r["n"] = file.n;
  r["equation"] = "u_t = " + to_string(file.rhs, file.n);
  return r;
}

nlohmann::ordered_json optional_bool(const std::optional<bool>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

Report ma_section(const MAReport& ma) {
  Report r;
  r["minor_affine"] = ma.minor_affine;
  r["residue_vanishes"] = optional_bool(ma.residue_vanishes);
  r["n1_affine"] = optional_bool(ma.n1_affine);
  return r;
}

ResidueMode mode_of(const CommandOptions& o) {
  return o.symbolic ? ResidueMode::Symbolic : ResidueMode::AtReference;
}

void finish(Report& r, std::vector<std::string> warnings, const CommandOptions& o, Clock::time_point start) {
  if (o.timing)
    r["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  r["warnings"] = std::move(warnings);
}

void add_ma_warnings(const MAReport& ma, std::vector<std::string>& warnings) {
  if (ma.singular_symbol)
    warnings.push_back(std::string(error_code_name(ErrorCode::SingularSymbol)) +
                       ": symbol not invertible at the reference jet; residue test skipped");
}

Report law_json(const ConservationLaw& law, int n) {
  Report j;
  j["density"] = to_string(law.density, n);
  if (law.flux_found) {
    auto flux = nlohmann::ordered_json::array();
    for (const auto& x : law.flux) flux.push_back(to_string(x, n));
    j["flux"] = std::move(flux);
  } else {
    j["flux"] = nullptr;
  }
  j["characteristic"] = to_string(law.characteristic, n);
  j["order"] = jacobi_potential_order(law);
  return j;
}

}  // namespace

CommandResult cmd_classify(const ProblemFile& file, const CommandOptions& options) {
  const auto start = Clock::now();
  const EvolutionEquation eq = file.equation();
  std::vector<std::string> warnings;
  CommandResult out;
  out.report = header(file);
  const Parabolicity p = parabolicity_check(eq);
  out.report["parabolicity"] = to_string(p);
  const MAReport ma = ma_classify(eq, mode_of(options));
  out.report["ma"] = ma_section(ma);
  out.report["laws"] = nlohmann::ordered_json::array();
  add_ma_warnings(ma, warnings);
  finish(out.report, std::move(warnings), options, start);
  return out;
}

CommandResult cmd_claws(const ProblemFile& file, const CommandOptions& options) {
  const auto start = Clock::now();
  const EvolutionEquation eq = file.equation();
  std::vector<std::string> warnings;

  AnsatzSpec spec;
  spec.jet_degree = options.jet_degree.value_or(file.jet_degree.value_or(kDefaultJetDegree));
  spec.base_degree = options.base_degree.value_or(file.base_degree.value_or(kDefaultBaseDegree));
  spec.max_jet_order = options.order.value_or(file.order.value_or(kDefaultOrder));
  if (options.unsafe_order) {
    spec.max_jet_order = *options.unsafe_order;
    spec.unsafe_order = true;
    warnings.push_back("unsafe order override: densities of order " + std::to_string(*options.unsafe_order));
  } else if (spec.max_jet_order > kDefaultOrder) {
    warnings.push_back("order " + std::to_string(spec.max_jet_order) + " capped at 2 (use --unsafe-order)");
    spec.max_jet_order = kDefaultOrder;
  }

  CommandResult out;
  out.report = header(file);
  out.report["ansatz"] = {{"order", spec.max_jet_order},
                          {"jet_degree", spec.jet_degree},
                          {"base_degree", spec.base_degree}};
  const Parabolicity p = parabolicity_check(eq);
  out.report["parabolicity"] = to_string(p);
  const MAReport ma = ma_classify(eq, mode_of(options));
  out.report["ma"] = ma_section(ma);
  add_ma_warnings(ma, warnings);

  auto laws = nlohmann::ordered_json::array();
  if (p == Parabolicity::NotParabolic && !options.force) {
    warnings.push_back(std::string(error_code_name(ErrorCode::NotParabolic)) +
                       ": symbol is not parabolic at the reference jet (use --force)");
    out.exit_code = 1;
  } else {
    SearchOptions search;
    search.force = options.force;
    const SearchResult found = find_conservation_laws(eq, spec, search);
    warnings.insert(warnings.end(), found.warnings.begin(), found.warnings.end());
    for (const auto& law : found.laws) laws.push_back(law_json(law, eq.n));
    const CrossValidation cv = cross_validate_ma(eq, found.laws, mode_of(options));
    if (cv.violation) {
      warnings.push_back("Monge-Ampere cross-validation violation: " + cv.detail);
      out.exit_code = 1;
    } else if (cv.inconclusive) {
      warnings.push_back("Monge-Ampere cross-validation inconclusive: " + cv.detail);
    }
  }
  out.report["laws"] = std::move(laws);
  finish(out.report, std::move(warnings), options, start);
  return out;
}

CommandResult cmd_verify(const ProblemFile& file, const std::string& density,
                         const std::vector<std::string>& fluxes, const CommandOptions& options) {
  const auto start = Clock::now();
  const EvolutionEquation eq = file.equation();
  if (fluxes.size() != static_cast<std::size_t>(eq.n))
    throw std::invalid_argument("expected " + std::to_string(eq.n) + " flux components, got " +
                                std::to_string(fluxes.size()));
  ConservationLaw law;
  law.density = parse_expression(density, eq.n);
  for (const auto& f : fluxes) law.flux.push_back(parse_expression(f, eq.n));
  law.characteristic = characteristic(law.density);
  const bool ok = verify(eq, law);

  CommandResult out;
  out.report = header(file);
  out.report["density"] = to_string(law.density, eq.n);
  auto flux = nlohmann::ordered_json::array();
  for (const auto& x : law.flux) flux.push_back(to_string(x, eq.n));
  out.report["flux"] = std::move(flux);
  out.report["verified"] = ok;
  out.report["characteristic"] = to_string(law.characteristic, eq.n);
  out.report["order"] = jacobi_potential_order(law);
  std::vector<std::string> warnings;
  if (ok && law.characteristic.is_zero()) warnings.push_back("law is trivial: its characteristic vanishes");
  finish(out.report, std::move(warnings), options, start);
  out.exit_code = ok ? 0 : 1;
  return out;
}

CommandResult cmd_dims(int n, int r, const CommandOptions& options) {
  const auto start = Clock::now();
  if (n < 1 || r < 0) throw std::invalid_argument("dims needs n >= 1 and r >= 0");
  CommandResult out;
  out.report["schema_version"] = kSchemaVersion;
  out.report["n"] = n;
  out.report["r"] = r;
  out.report["tableau_dim"] = tableau_dimension(n, r);
  out.report["system_dim"] = parabolic_system_dimension(n);
  out.report["deprolongation_dim"] = deprolongation_dimension(n);
  finish(out.report, {}, options, start);
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  auto scalar = [](const nlohmann::ordered_json& v) {
    if (v.is_null()) return std::string("n/a");
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, value] : report.items()) {
    if (key == "laws") {
      os << "laws: " << value.size() << "\n";
      std::size_t k = 0;
      for (const auto& law : value) {
        os << "  [" << ++k << "] density        " << scalar(law["density"]) << "\n";
        if (law["flux"].is_null()) {
          os << "      flux           (not reconstructed)\n";
        } else {
          for (std::size_t i = 0; i < law["flux"].size(); ++i)
            os << "      flux[" << i + 1 << "]        " << scalar(law["flux"][i]) << "\n";
        }
        os << "      characteristic " << scalar(law["characteristic"]) << "  (order "
           << law["order"].get<int>() << ")\n";
      }
    } else if (key == "warnings") {
      for (const auto& w : value) os << "warning: " << w.get<std::string>() << "\n";
    } else if (value.is_object()) {
      os << key << ":\n";
      for (const auto& [k2, v2] : value.items()) os << "  " << k2 << ": " << scalar(v2) << "\n";
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i)
        os << key << "[" << i + 1 << "]: " << scalar(value[i]) << "\n";
    } else {
      os << key << ": " << scalar(value) << "\n";
    }
  }
  return os.str();
}

}  // namespace jetlaw
