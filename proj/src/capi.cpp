#include "jetlaw/jetlaw.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetlaw/errors.hpp"
#include "jetlaw/problem.hpp"
#include "jetlaw/report.hpp"

struct jetlaw_problem {
  jetlaw::ProblemFile file;
};

namespace {

thread_local std::string g_last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jetlaw::CommandOptions convert(const jetlaw_options* o) {
  jetlaw::CommandOptions c;
  if (o == nullptr) return c;
  if (o->jet_degree >= 0) c.jet_degree = o->jet_degree;
  if (o->base_degree >= 0) c.base_degree = o->base_degree;
  if (o->order >= 0) c.order = o->order;
  if (o->unsafe_order >= 0) c.unsafe_order = o->unsafe_order;
  c.symbolic = o->symbolic != 0;
  c.force = o->force != 0;
  c.timing = o->timing != 0;
  return c;
}

std::string render(const jetlaw::CommandResult& result, const jetlaw_options* o) {
  if (o != nullptr && o->format == JETLAW_FORMAT_TEXT) return jetlaw::render_text(result.report);
  return result.report.dump(2) + "\n";
}

template <class F>
jetlaw_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return JETLAW_OK;
  } catch (const jetlaw::ParseError& e) {
    g_last_error = "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": " + e.what();
    return JETLAW_PARSE_ERROR;
  } catch (const jetlaw::Error& e) {
    g_last_error = e.what();
    return e.is_parse_error() ? JETLAW_PARSE_ERROR : JETLAW_DOMAIN_ERROR;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return JETLAW_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JETLAW_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return JETLAW_INTERNAL_ERROR;
  }
}

template <class F>
jetlaw_status run_command(char** report, int* exit_code, F&& f) {
  if (report == nullptr || exit_code == nullptr) {
    g_last_error = "null output pointer";
    return JETLAW_INVALID_ARGUMENT;
  }
  *report = nullptr;
  return guarded([&] {
    const auto& [text, code] = f();
    *report = duplicate(text);
    *exit_code = code;
  });
}

}  // namespace

extern "C" {

void jetlaw_options_init(jetlaw_options* options) {
  if (options == nullptr) return;
  options->jet_degree = -1;
  options->base_degree = -1;
  options->order = -1;
  options->unsafe_order = -1;
  options->symbolic = 0;
  options->force = 0;
  options->timing = 0;
  options->format = JETLAW_FORMAT_JSON;
}

jetlaw_status jetlaw_problem_parse(const char* source, jetlaw_problem** out) {
  if (source == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return JETLAW_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new jetlaw_problem{jetlaw::parse_problem(source)}; });
}

void jetlaw_problem_free(jetlaw_problem* problem) { delete problem; }

int jetlaw_problem_dimension(const jetlaw_problem* problem) { return problem ? problem->file.n : -1; }

jetlaw_status jetlaw_problem_print(const jetlaw_problem* problem, char** out) {
  if (problem == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return JETLAW_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = duplicate(jetlaw::print_problem(problem->file)); });
}

jetlaw_status jetlaw_classify(const jetlaw_problem* problem, const jetlaw_options* options, char** report,
                              int* exit_code) {
  if (problem == nullptr) {
    g_last_error = "null problem";
    return JETLAW_INVALID_ARGUMENT;
  }
  return run_command(report, exit_code, [&] {
    const auto r = jetlaw::cmd_classify(problem->file, convert(options));
    return std::pair{render(r, options), r.exit_code};
  });
}

jetlaw_status jetlaw_claws(const jetlaw_problem* problem, const jetlaw_options* options, char** report,
                           int* exit_code) {
  if (problem == nullptr) {
    g_last_error = "null problem";
    return JETLAW_INVALID_ARGUMENT;
  }
  return run_command(report, exit_code, [&] {
    const auto r = jetlaw::cmd_claws(problem->file, convert(options));
    return std::pair{render(r, options), r.exit_code};
  });
}

jetlaw_status jetlaw_verify(const jetlaw_problem* problem, const char* density, const char* const* fluxes,
                            size_t flux_count, const jetlaw_options* options, char** report, int* exit_code) {
  if (problem == nullptr || density == nullptr || (flux_count > 0 && fluxes == nullptr)) {
    g_last_error = "null argument";
    return JETLAW_INVALID_ARGUMENT;
  }
  return run_command(report, exit_code, [&] {
    std::vector<std::string> f(fluxes, fluxes + flux_count);
    const auto r = jetlaw::cmd_verify(problem->file, density, f, convert(options));
    return std::pair{render(r, options), r.exit_code};
  });
}

jetlaw_status jetlaw_dims(int n, int r, const jetlaw_options* options, char** report, int* exit_code) {
  return run_command(report, exit_code, [&] {
    const auto res = jetlaw::cmd_dims(n, r, convert(options));
    return std::pair{render(res, options), res.exit_code};
  });
}

void jetlaw_string_free(char* s) { std::free(s); }

const char* jetlaw_last_error(void) { return g_last_error.c_str(); }

const char* jetlaw_version(void) { return "1.0.0"; }

}  // extern "C"
