#ifndef PBLAB_POLY_IO_HPP
#define PBLAB_POLY_IO_HPP

#include <string>

#include "pblab/poly.hpp"

namespace pblab {

/// Deterministic canonical rendering, highest graded-lex term first,
/// e.g. "3/2*x1^2*x2 - x3 + 7". The zero polynomial prints as "0".
std::string to_string(const Poly& p);

/// Parses the polynomial text grammar: terms joined by + and -, a term
/// being an optional rational coefficient and/or variable powers with '*'
/// between factors and '^' binding tighter than '*'. Variables are
/// x1..x9; whitespace is insignificant. Throws errc::parse_error with the
/// offending column on malformed input.
Poly parse_poly(const std::string& text, int nvars);

}  // namespace pblab

#endif
