#pragma once

#include <cstddef>
#include <string_view>

#include "projindex/multipoly.hpp"

namespace projindex {

/// Naming of polynomial variables in text: `prefix` followed by an index in
/// [first, first + count). Variable `prefix<first + i>` is internal variable i.
struct VarScheme {
  char prefix;
  unsigned first;
  std::size_t count;

  static VarScheme homogeneous(std::size_t n) { return {'z', 0, n + 1}; }  // z0..zn
  static VarScheme chart(std::size_t n) { return {'w', 1, n}; }            // w1..wn
  static VarScheme elementary(std::size_t r) { return {'e', 1, r}; }       // e1..er
  static VarScheme symmetric(std::size_t r) { return {'x', 1, r}; }        // x1..xr
};

/// Parses integer/rational coefficients, variables, + - * / ^ and
/// parentheses, e.g. "z1*z2 - 3/2*z0^2". Division is allowed by nonzero
/// constants only; exponents are nonnegative integer literals.
/// Throws ParseError carrying line and column.
MultiPoly parse_poly(std::string_view text, const VarScheme& vars);

/// True when `text` mentions a variable with the given prefix letter.
bool mentions_prefix(std::string_view text, char prefix);

}  // namespace projindex
