#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jetlaw/problem.hpp"

namespace jetlaw {

inline constexpr int kSchemaVersion = 1;

using Report = nlohmann::ordered_json;

struct CommandOptions {
  std::optional<int> jet_degree;
  std::optional<int> base_degree;
  std::optional<int> order;         // capped at 2
  std::optional<int> unsafe_order;  // explicit order above 2
  bool symbolic = false;
  bool force = false;
  bool timing = false;
};

// Exit codes: 0 success, 1 domain error, 2 parse error.
struct CommandResult {
  Report report;
  int exit_code = 0;
};

CommandResult cmd_classify(const ProblemFile& file, const CommandOptions& options);
CommandResult cmd_claws(const ProblemFile& file, const CommandOptions& options);
CommandResult cmd_verify(const ProblemFile& file, const std::string& density,
                         const std::vector<std::string>& fluxes, const CommandOptions& options);
CommandResult cmd_dims(int n, int r, const CommandOptions& options);

std::string render_text(const Report& report);

}  // namespace jetlaw
