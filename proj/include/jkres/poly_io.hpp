#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "jkres/polynomial.hpp"

namespace jkres {

/// Parses polynomial text over variables x1..x{nvars}.
///
/// Grammar: terms joined by '+'/'-'; a term is an optional coefficient
/// (integer or p/q) and '*'-joined powers xK^E. Parenthesized
/// sub-expressions, optionally raised to a power, are also accepted so that
/// factored output such as "x2*(x1+x2)" reads back. Whitespace is ignored.
/// Throws ParseError on bad syntax or a variable index outside 1..nvars.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars,
                            MonomialOrder order = MonomialOrder::grevlex);

/// Largest variable index K mentioned as xK in `text` (0 if none).
std::size_t max_variable_index(std::string_view text);

/// Canonical text: terms in descending graded-reverse-lex order, e.g.
/// "x1^2 - 3/2*x2". The zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& f);

/// Product of linear forms, multi-term factors parenthesized, e.g. "x2*(x1+x2)".
std::string format_product(std::span<const LinearForm> forms);

}  // namespace jkres
