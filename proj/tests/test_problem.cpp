#include "doctest.h"

#include "jetlaw/errors.hpp"
#include "jetlaw/problem.hpp"
#include "support.hpp"

using namespace jt;

namespace {

ErrorCode parse_failure(const std::string& src) {
  try {
    parse_problem(src);
  } catch (const ParseError& e) {
    return e.code();
  }
  FAIL("parsed: " << src);
  return ErrorCode::ParseError;
}

const ParseError parse_error(const std::string& src) {
  try {
    parse_problem(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed: " << src);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse examples") {
  const ProblemFile burgers = parse_problem("n=1; u_t = u_xx + u*u_x");
  CHECK(burgers.n == 1);
  CHECK(burgers.rhs == E("u_xx") + E("u") * E("u_x"));

  const ProblemFile det = parse_problem("n=2; u_t = u_11*u_22 - u_12^2");
  CHECK(det.n == 2);
  CHECK(det.rhs == Expr(jet({1, 1})) * Expr(jet({2, 2})) - Expr(jet({1, 2})) * Expr(jet({1, 2})));

  CHECK(parse_failure("n=1; u_t = u_tt") == ErrorCode::TimeDerivativeOnRHS);
}

TEST_CASE("grammar: file") {
  CHECK(parse_problem("n = 3 ; u_t = u_11 + u_22 + u_33").n == 3);
  CHECK(parse_failure("u_t = u_xx") == ErrorCode::ParseError);
  CHECK(parse_failure("n = 1 u_t = u_xx") == ErrorCode::ParseError);
  CHECK(parse_failure("n = 1; u = u_xx") == ErrorCode::ParseError);
  CHECK(parse_failure("n = 1; u_t u_xx") == ErrorCode::ParseError);
  CHECK(parse_failure("n = 0; u_t = u") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n = 6; u_t = u") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n = 1; u_t = u_xx;") == ErrorCode::ParseError);
}

TEST_CASE("grammar: expr") {
  CHECK(parse_problem("n=1; u_t = u - u_x + 2").rhs == E("u") - E("u_x") + Expr(2));
  CHECK(parse_failure("n=1; u_t = u +") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u + + u") == ErrorCode::ParseError);
}

TEST_CASE("grammar: term") {
  CHECK(parse_problem("n=1; u_t = u*u_x/2").rhs == Expr(Rational(1, 2)) * E("u") * E("u_x"));
  CHECK(parse_problem("n=1; u_t = 1/2/u").rhs == Expr(1) / (Expr(2) * E("u")));
  CHECK(parse_failure("n=1; u_t = u *") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u u_x") == ErrorCode::ParseError);  // no implicit product
  CHECK(parse_failure("n=1; u_t = u/0") == ErrorCode::ParseError);
}

TEST_CASE("grammar: unary") {
  CHECK(parse_problem("n=1; u_t = -u_xx").rhs == -E("u_xx"));
  CHECK(parse_problem("n=1; u_t = u*-u").rhs == -(E("u") * E("u")));
  CHECK(parse_failure("n=1; u_t = --u") == ErrorCode::ParseError);
}

TEST_CASE("grammar: factor") {
  CHECK(parse_problem("n=1; u_t = (u + 1)^2").rhs == E("u^2 + 2*u + 1"));
  CHECK(parse_problem("n=1; u_t = -u^2").rhs == -(E("u") * E("u")));
  CHECK(parse_failure("n=1; u_t = u^") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u^-1") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u^99999") == ErrorCode::ParseError);
}

TEST_CASE("grammar: atom") {
  CHECK(parse_problem("n=1; u_t = 3").rhs == Expr(3));
  CHECK(parse_problem("n=1; u_t = ((u))").rhs == E("u"));
  CHECK(parse_failure("n=1; u_t = (u") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = )") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = 1.5") == ErrorCode::ParseError);
}

TEST_CASE("grammar: ident") {
  CHECK(parse_problem("n=1; u_t = t*x*u").rhs == Expr(Symbol::time()) * Expr(Symbol::base(1)) * E("u"));
  CHECK(parse_problem("n=2; u_t = x1*x2*u_1").rhs ==
        Expr(Symbol::base(1)) * Expr(Symbol::base(2)) * Expr(jet({1})));
  CHECK(parse_failure("n=2; u_t = x*u") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n=2; u_t = x3") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n=1; u_t = y") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = v_xx") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_t") == ErrorCode::TimeDerivativeOnRHS);
  CHECK(parse_failure("n=1; u_t = u_xt") == ErrorCode::TimeDerivativeOnRHS);
}

TEST_CASE("grammar: indices") {
  CHECK(parse_problem("n=1; u_t = u_xxx").rhs == Expr(jet({1, 1, 1})));
  CHECK(parse_problem("n=1; u_t = u_11").rhs == Expr(jet({1, 1})));
  CHECK(parse_problem("n=2; u_t = u_21").rhs == Expr(jet({1, 2})));
  CHECK(parse_problem("n=2; u_t = u_112").rhs == Expr(jet({1, 1, 2})));
  CHECK(parse_failure("n=2; u_t = u_13") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n=2; u_t = u_xx") == ErrorCode::IndexOutOfRange);
  CHECK(parse_failure("n=1; u_t = u_x1") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_0") == ErrorCode::IndexOutOfRange);
}

TEST_CASE("grammar: option") {
  const ProblemFile f = parse_problem(
      "n = 2;\nu_t = u*u_11 + u_22;\nref u = 3/2;\nref u_11 = -1;\njet_degree = 2;\nbase_degree = 1;\norder = 2");
  CHECK(f.reference.at(Symbol::u()) == Rational(3, 2));
  CHECK(f.reference.at(jet({1, 1})) == -1);
  CHECK(f.jet_degree == std::optional<int>(2));
  CHECK(f.base_degree == std::optional<int>(1));
  CHECK(f.order == std::optional<int>(2));
  CHECK(parse_failure("n=1; u_t = u_xx; ref u = x") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_xx; ref u 1") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_xx; ref u = 1/0") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_xx; jet_degree = -1") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_xx; colour = 2") == ErrorCode::ParseError);
  CHECK(parse_failure("n=1; u_t = u_xx; ref u_xt = 1") == ErrorCode::TimeDerivativeOnRHS);
}

TEST_CASE("parse errors carry position and expectations") {
  const ParseError e = parse_error("n = 1;\nu_t = u +\n  * u");
  CHECK(e.line() == 3);
  CHECK(e.column() == 3);
  CHECK_FALSE(e.expected().empty());
  const ParseError missing = parse_error("n = 1 u_t = u");
  CHECK(missing.line() == 1);
  CHECK(missing.column() == 7);
  CHECK(missing.expected() == std::vector<std::string>{";"});
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_problem("n=1;u_t=u_xx+u*u_x") == parse_problem("  n = 1 ;\n\tu_t =\n u_xx + u * u_x\n"));
}

TEST_CASE("equation validation") {
  CHECK_THROWS_AS(parse_problem("n=1; u_t = u_xxx").equation(), Error);
  CHECK_NOTHROW(parse_problem("n=1; u_t = u_xx + x*t*u").equation());
  const EvolutionEquation eq = parse_problem("n=1; u_t = u*u_xx; ref u = 2").equation();
  CHECK(eq.reference_jet.at(Symbol::u()) == 2);
  CHECK(eq.reference_jet.at(jet({1, 1})) == 0);
}

TEST_CASE("property: parse-print round trip") {
  Gen g(0x9a75e001);
  for (int k = 0; k < 150; ++k) {
    const int n = g.range(1, 3);
    const auto vars = jet_space(n, 2);
    ProblemFile f;
    f.n = n;
    f.rhs = g.rational(vars, 4, 2);
    const int refs = g.range(0, 3);
    for (int r = 0; r < refs; ++r) f.reference[g.pick(vars)] = g.coeff(9);
    if (g.coin()) f.jet_degree = g.range(0, 4);
    if (g.coin()) f.base_degree = g.range(0, 4);
    if (g.coin()) f.order = g.range(0, 2);
    const std::string printed = print_problem(f);
    CAPTURE(printed);
    CHECK(parse_problem(printed) == f);
  }
}

TEST_CASE("corpus files parse and validate") {
  for (const char* name : {"heat1.pde", "burgers.pde", "heat2.pde", "nonaffine1.pde", "dethess.pde"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_corpus(name).equation());
  }
}
