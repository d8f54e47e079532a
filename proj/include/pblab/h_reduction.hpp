#ifndef PBLAB_H_REDUCTION_HPP
#define PBLAB_H_REDUCTION_HPP

#include <vector>

#include "pblab/homogeneous.hpp"
#include "pblab/poly.hpp"
#include "pblab/rational.hpp"

namespace pblab {

struct HReduction {
  Rational scale;  // a in P = a * H^k
  int exponent;    // k
};

/// Writes a homogeneous P commuting with H as a*H^k. H must be
/// nonconstant and no proper power (errc::h_is_proper_power otherwise);
/// the commuting hypothesis is verified, not assumed
/// (errc::not_commuting). P = 0 yields (0, 0). A nonzero P whose degree
/// is not a multiple of deg H cannot commute with an honest H and is
/// reported as errc::inconsistent: it certifies a violated hypothesis,
/// e.g. an H that is a power only over an extension field.
///
/// The scale is recovered from graded-lex leading coefficients and the
/// claim P = a*H^k is verified by exact re-powering; no root extraction
/// is involved.
HReduction h_reduce(const HomogeneousPoly& H, const HomogeneousPoly& P);

/// Expands an arbitrary P commuting with H in powers of H: returns
/// (a_0, ..., a_k) with P equal to the sum of a_l * H^l exactly; the
/// empty vector for P = 0. Components of P at degrees not divisible by
/// deg H must vanish (errc::inconsistent otherwise).
std::vector<Rational> express_in_h(const HomogeneousPoly& H, const Poly& P);

}  // namespace pblab

#endif
