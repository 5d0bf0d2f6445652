// Command-line front end. Uses only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetlaw/jetlaw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int exit_for(jetlaw_status status) {
  switch (status) {
    case JETLAW_OK: return kExitOk;
    case JETLAW_PARSE_ERROR:
    case JETLAW_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

int report_failure(jetlaw_status status) {
  std::cerr << "jetlaw: " << jetlaw_last_error() << "\n";
  return exit_for(status);
}

bool read_source(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct ProblemHandle {
  jetlaw_problem* p = nullptr;
  ~ProblemHandle() { jetlaw_problem_free(p); }
};

int load(const std::string& path, ProblemHandle& handle) {
  std::string source;
  if (!read_source(path, source)) {
    std::cerr << "jetlaw: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  const jetlaw_status s = jetlaw_problem_parse(source.c_str(), &handle.p);
  if (s != JETLAW_OK) {
    std::cerr << "jetlaw: " << path << ": " << jetlaw_last_error() << "\n";
    return exit_for(s);
  }
  return kExitOk;
}

int emit(jetlaw_status status, char* report, int exit_code) {
  if (status != JETLAW_OK) return report_failure(status);
  std::fputs(report, stdout);
  jetlaw_string_free(report);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conservation laws and Monge-Ampere classification for scalar parabolic evolution equations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jetlaw_version()));

  jetlaw_options opts;
  jetlaw_options_init(&opts);
  bool text = false;
  bool json = false;

  auto add_format = [&](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "JSON report (default)");
    auto* t = cmd->add_flag("--text", text, "human-readable report");
    j->excludes(t);
  };
  auto add_common = [&](CLI::App* cmd) {
    add_format(cmd);
    cmd->add_flag("--timing", opts.timing, "include wall-clock timing in the report");
    cmd->add_flag("--symbolic", opts.symbolic, "keep the Monge-Ampere residue symbolic in the jet");
  };

  std::string file;

  auto* classify = app.add_subcommand("classify", "parabolicity and Monge-Ampere verdicts");
  classify->add_option("FILE", file, "problem file ('-' for stdin)")->required();
  add_common(classify);

  auto* claws = app.add_subcommand("claws", "search for polynomial conservation laws");
  claws->add_option("FILE", file, "problem file ('-' for stdin)")->required();
  add_common(claws);
  claws->add_option("--jet-degree,--jet_degree", opts.jet_degree, "total degree in jet variables")
      ->check(CLI::NonNegativeNumber);
  claws->add_option("--base-degree,--base_degree", opts.base_degree, "total degree in t and x")
      ->check(CLI::NonNegativeNumber);
  claws->add_option("--order", opts.order, "maximal jet order of the density (capped at 2)")
      ->check(CLI::NonNegativeNumber);
  claws->add_option("--unsafe-order,--unsafe_order", opts.unsafe_order, "density order above the cap")
      ->check(CLI::NonNegativeNumber);
  claws->add_flag("--force", opts.force, "search even when the symbol is not parabolic");

  std::string density;
  std::vector<std::string> fluxes;
  auto* verify = app.add_subcommand("verify", "check that a density and flux form a conservation law");
  verify->add_option("FILE", file, "problem file ('-' for stdin)")->required();
  verify->add_option("--density", density, "density expression")->required();
  verify->add_option("--flux", fluxes, "flux component, one per spatial direction in order")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_format(verify);
  verify->add_flag("--timing", opts.timing, "include wall-clock timing in the report");

  int dim_n = 1;
  int dim_r = 0;
  auto* dims = app.add_subcommand("dims", "tableau and system dimensions");
  dims->add_option("-n", dim_n, "spatial dimension")->required()->check(CLI::PositiveNumber);
  dims->add_option("-r", dim_r, "prolongation level")->required()->check(CLI::NonNegativeNumber);
  add_format(dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opts.format = text ? JETLAW_FORMAT_TEXT : JETLAW_FORMAT_JSON;

  char* report = nullptr;
  int exit_code = 0;
  if (*dims) {
    const jetlaw_status status = jetlaw_dims(dim_n, dim_r, &opts, &report, &exit_code);
    return emit(status, report, exit_code);
  }

  ProblemHandle problem;
  if (const int rc = load(file, problem); rc != kExitOk) return rc;

  jetlaw_status status = JETLAW_INTERNAL_ERROR;
  if (*classify) {
    status = jetlaw_classify(problem.p, &opts, &report, &exit_code);
  } else if (*claws) {
    status = jetlaw_claws(problem.p, &opts, &report, &exit_code);
  } else if (*verify) {
    std::vector<const char*> raw;
    for (const auto& f : fluxes) raw.push_back(f.c_str());
    status = jetlaw_verify(problem.p, density.c_str(), raw.data(), raw.size(), &opts, &report, &exit_code);
  }
  return emit(status, report, exit_code);
}
