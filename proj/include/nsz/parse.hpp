#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsz/ffield.hpp"
#include "nsz/polynomial.hpp"
#include "nsz/rational.hpp"

namespace nsz {

struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint32_t prime = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A parsed problem:
///
///     # comment
///     field p 5          (or: field q)
///     vars x1 x2
///     x1*x2 - 1          one generator per line
///     query x1 + 1       optional, for member / radical-member
///
/// Polynomials use integer literals, declared variables, `^` with a positive
/// integer exponent, `*`, `/` by an integer literal, `+`, binary and unary
/// `-`, and parentheses. Coefficients are kept over Q; conversion to F_p
/// happens when the field is built.
struct ProblemFile {
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<Polynomial<Rational>> generators;
  std::optional<Polynomial<Rational>> query;
};

/// Throws ParseError (with line and column) on malformed input, undeclared
/// variables, nonpositive exponents and composite characteristics.
ProblemFile parse_problem(std::string_view text);

/// Parses one polynomial over the given variables; `line` is used in errors.
Polynomial<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                      std::size_t line = 1, std::size_t column_offset = 0);

/// The image of a rational in F_p (or in `tower`). Throws UsageError when the
/// denominator vanishes there.
FFElement reduce_rational(const Rational& r, const TowerPtr& tower);
Polynomial<FFElement> reduce_rational(const Polynomial<Rational>& p, const TowerPtr& tower);

}  // namespace nsz
