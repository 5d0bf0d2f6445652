#pragma once

#include "doctest.h"
#include "oracles.hpp"

namespace doctest {
template <>
struct StringMaker<jetlaw::Expr> {
  static String convert(const jetlaw::Expr& e) { return jetlaw::to_string(e, 2).c_str(); }
};
}  // namespace doctest
