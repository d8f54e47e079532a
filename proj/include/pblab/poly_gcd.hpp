#ifndef PBLAB_POLY_GCD_HPP
#define PBLAB_POLY_GCD_HPP

#include <optional>
#include <utility>

#include "pblab/homogeneous.hpp"
#include "pblab/poly.hpp"

namespace pblab {

/// Divides by the graded-lex leading coefficient so it becomes 1.
Poly normalize_leading(const Poly& p);

/// Greatest common divisor over Q[x1..xn], normalized to leading
/// coefficient 1. Primitive pseudo-remainder sequences on the lowest
/// variable present; adequate at desk scale. Error when both inputs are
/// zero.
Poly gcd_multivariate(const Poly& P, const Poly& Q);

/// h divided by gcd(h, dh/dx1, ..., dh/dxn): the product of h's
/// irreducible factors taken with multiplicity one, normalized. Error on
/// zero or constant input.
Poly sqrf(const Poly& h);

bool is_square_free(const Poly& h);

/// Writes H = g^m with m >= 2 maximal, or nullopt when H is no such
/// power. Root extraction runs by undetermined coefficients along the
/// graded-lex order and every candidate is verified by exact re-powering.
/// Only exact rational roots of the leading coefficient are accepted, so
/// powers visible only over an extension field report nullopt.
std::optional<std::pair<HomogeneousPoly, int>> is_proper_power(const HomogeneousPoly& H);

}  // namespace pblab

#endif
