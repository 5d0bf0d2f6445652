#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jetlaw {

enum class ErrorCode {
  DivisionByZeroExpr,
  NotPolynomialIn,
  OrderOverflow,
  TableTooShallow,
  TimeJetPresent,
  NotInDivergenceImage,
  PreconditionSpatialDim,
  SingularSymbol,
  AnsatzTooLarge,
  FluxReconstructionFailed,
  InvalidEquation,
  NotParabolic,
  ParseError,
  IndexOutOfRange,
  TimeDerivativeOnRHS,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_parse_error() const noexcept {
    return code_ == ErrorCode::ParseError || code_ == ErrorCode::IndexOutOfRange ||
           code_ == ErrorCode::TimeDerivativeOnRHS;
  }

 private:
  ErrorCode code_;
};

// Carries the 1-based source position and the set of tokens that would have
// been accepted there.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, std::vector<std::string> expected,
             const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace jetlaw
