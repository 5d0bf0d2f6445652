#include "doctest.h"

#include <cstring>
#include <string>

#include "jetlaw/jetlaw.h"

namespace {

struct Problem {
  jetlaw_problem* p = nullptr;
  ~Problem() { jetlaw_problem_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  jetlaw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, print and free") {
  Problem pr;
  REQUIRE(jetlaw_problem_parse("n=2; u_t = u_11 + u_22; ref u = 1", &pr.p) == JETLAW_OK);
  CHECK(jetlaw_problem_dimension(pr.p) == 2);
  char* printed = nullptr;
  REQUIRE(jetlaw_problem_print(pr.p, &printed) == JETLAW_OK);
  const std::string text = take(printed);
  Problem again;
  REQUIRE(jetlaw_problem_parse(text.c_str(), &again.p) == JETLAW_OK);
  char* printed_again = nullptr;
  REQUIRE(jetlaw_problem_print(again.p, &printed_again) == JETLAW_OK);
  CHECK(take(printed_again) == text);
  CHECK(std::strlen(jetlaw_last_error()) == 0);
}

TEST_CASE("parse errors") {
  jetlaw_problem* p = nullptr;
  CHECK(jetlaw_problem_parse("n=1; u_t = u_tt", &p) == JETLAW_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(std::string(jetlaw_last_error()).find("TimeDerivativeOnRHS") != std::string::npos);
  CHECK(jetlaw_problem_parse("n=1; u_t = u +", &p) == JETLAW_PARSE_ERROR);
  CHECK(std::string(jetlaw_last_error()).find("line 1") != std::string::npos);
  CHECK(jetlaw_problem_parse(nullptr, &p) == JETLAW_INVALID_ARGUMENT);
}

TEST_CASE("classify and claws through the C API") {
  Problem pr;
  REQUIRE(jetlaw_problem_parse("n=1; u_t = u_xx + u*u_x; jet_degree = 2", &pr.p) == JETLAW_OK);
  jetlaw_options o;
  jetlaw_options_init(&o);
  char* report = nullptr;
  int code = -1;
  REQUIRE(jetlaw_classify(pr.p, &o, &report, &code) == JETLAW_OK);
  CHECK(code == 0);
  CHECK(take(report).find("\"parabolicity\": \"strict\"") != std::string::npos);
  REQUIRE(jetlaw_claws(pr.p, &o, &report, &code) == JETLAW_OK);
  CHECK(take(report).find("\"density\": \"u\"") != std::string::npos);
  o.format = JETLAW_FORMAT_TEXT;
  REQUIRE(jetlaw_claws(pr.p, &o, &report, &code) == JETLAW_OK);
  CHECK(take(report).find("laws: 1") != std::string::npos);
  CHECK(jetlaw_claws(nullptr, &o, &report, &code) == JETLAW_INVALID_ARGUMENT);
}

TEST_CASE("domain errors and exit codes") {
  Problem backward;
  REQUIRE(jetlaw_problem_parse("n=1; u_t = -u_xx", &backward.p) == JETLAW_OK);
  char* report = nullptr;
  int code = -1;
  REQUIRE(jetlaw_claws(backward.p, nullptr, &report, &code) == JETLAW_OK);
  take(report);
  CHECK(code == 1);

  Problem third;
  REQUIRE(jetlaw_problem_parse("n=1; u_t = u_xxx", &third.p) == JETLAW_OK);
  CHECK(jetlaw_classify(third.p, nullptr, &report, &code) == JETLAW_DOMAIN_ERROR);
  CHECK(report == nullptr);
  CHECK(std::string(jetlaw_last_error()).find("InvalidEquation") != std::string::npos);
}

TEST_CASE("verify and dims") {
  Problem heat;
  REQUIRE(jetlaw_problem_parse("n=1; u_t = u_xx", &heat.p) == JETLAW_OK);
  const char* flux[] = {"-u_x"};
  char* report = nullptr;
  int code = -1;
  REQUIRE(jetlaw_verify(heat.p, "u", flux, 1, nullptr, &report, &code) == JETLAW_OK);
  CHECK(code == 0);
  CHECK(take(report).find("\"verified\": true") != std::string::npos);
  CHECK(jetlaw_verify(heat.p, "u", flux, 0, nullptr, &report, &code) == JETLAW_INVALID_ARGUMENT);
  CHECK(jetlaw_verify(heat.p, "u_t", flux, 1, nullptr, &report, &code) == JETLAW_PARSE_ERROR);

  REQUIRE(jetlaw_dims(2, 1, nullptr, &report, &code) == JETLAW_OK);
  const std::string dims = take(report);
  CHECK(dims.find("\"tableau_dim\": 7") != std::string::npos);
  CHECK(dims.find("\"system_dim\": 12") != std::string::npos);
  CHECK(jetlaw_dims(-1, 0, nullptr, &report, &code) == JETLAW_INVALID_ARGUMENT);
  CHECK(std::string(jetlaw_version()).size() > 0);
}
