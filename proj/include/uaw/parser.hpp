#pragma once

#include <functional>
#include <optional>
#include <string>

#include "uaw/free_algebra.hpp"

namespace uaw {

struct ParseError : std::runtime_error {
  ParseError(size_t offset, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " +
                           message),
        offset(offset) {}
  size_t offset;
};

/// Name and power resolution hooks for one algebra.
struct ParseContext {
  AlphabetPtr alphabet;
  /// Derived-name lookup (theta, C0..C3, t1..t3, ...); may be empty.
  std::function<std::optional<NCPoly>(const std::string&)> resolve_name;
  /// Expansion of letter^-n for n > 0 (X^-1 letters, t0 -> T0 - t0);
  /// returns nullopt when the letter has no usable inverse.
  std::function<std::optional<NCPoly>(GenId, int)> negative_letter_power;
};

/// Grammar: expression = sum of terms; term = factors joined by '*', '/' or
/// juxtaposition; factor = signed atom with optional ^<signed int>; atom =
/// integer | q | identifier | parenthesized expression.  Division requires a
/// scalar divisor.
NCPoly parse_expr(const std::string& text, const ParseContext& ctx);

/// Scalar-only subset: integers, q, ^, + - * /, parentheses, juxtaposition.
QScalar parse_scalar(const std::string& text);

}  // namespace uaw
