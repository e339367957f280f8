#pragma once

// Linear combinations of forests written as text, e.g.
//
//   [[]] - 1/2 [][] + 3*q1^2*{g}[] + (q1 + q2)*1
//
// Factors are rationals, q1, q2 (with optional ^k), forests in canonical or
// any bracket order, and parenthesised sub-expressions; juxtaposition, '*'
// and '·' all multiply. Whitespace may separate tokens but not split a forest.

#include <string_view>

#include "ckhopf/hopf.hpp"

namespace ckhopf {

/// Throws ParseError carrying the byte offset of the problem.
Element<BivariatePoly> parse_expression(std::string_view text);

/// Substitutes numeric values for q1, q2 in every coefficient.
Element<Rational> specialize(const Element<BivariatePoly>& a, const Rational& q1, const Rational& q2);

}  // namespace ckhopf
