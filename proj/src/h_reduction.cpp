#include "pblab/h_reduction.hpp"

#include "pblab/bracket.hpp"
#include "pblab/poly_gcd.hpp"

namespace pblab {

namespace {

void check_h(const HomogeneousPoly& H) {
  require(!H.is_zero() && H.degree() >= 1, errc::constant_input, "H must be nonconstant");
  if (is_proper_power(H).has_value())
    fail(errc::h_is_proper_power, "H is a power of a lower-degree polynomial");
}

void check_commuting(const HomogeneousPoly& H, const Poly& P) {
  if (!bracket_degree(H.poly(), P).is_neg_infinity())
    fail(errc::not_commuting, "[H,P] != 0");
}

HReduction reduce_checked(const HomogeneousPoly& H, const HomogeneousPoly& P) {
  if (P.is_zero()) return {Rational(0), 0};
  int dH = H.degree();
  int dP = P.degree();
  if (dP % dH != 0)
    fail(errc::inconsistent,
         "deg H does not divide deg P for nonzero commuting P; hypothesis on H is violated");
  int k = dP / dH;
  Poly hk = pow(H.poly(), k);
  Rational a = P.poly().leading_coefficient() / hk.leading_coefficient();
  if (hk.scaled(a) != P.poly())
    fail(errc::inconsistent, "commuting P is not a scalar multiple of H^k; hypothesis on H is violated");
  return {a, k};
}

}  // namespace

HReduction h_reduce(const HomogeneousPoly& H, const HomogeneousPoly& P) {
  check_h(H);
  check_commuting(H, P.poly());
  return reduce_checked(H, P);
}

std::vector<Rational> express_in_h(const HomogeneousPoly& H, const Poly& P) {
  check_h(H);
  check_commuting(H, P);
  if (P.is_zero()) return {};

  int dH = H.degree();
  int dP = static_cast<int>(P.degree().value());
  if (dP % dH != 0)
    fail(errc::inconsistent, "deg P is not a multiple of deg H");

  std::vector<Rational> coeffs(static_cast<size_t>(dP / dH) + 1, Rational(0));
  for (const auto& [deg, comp] : P.homogeneous_components()) {
    if (deg % dH != 0)
      fail(errc::inconsistent,
           "nonzero component at degree " + std::to_string(deg) + " not divisible by deg H");
    // [H,P] = 0 splits over the grading, so each part reduces on its own.
    auto red = reduce_checked(H, HomogeneousPoly(comp, deg));
    coeffs[static_cast<size_t>(deg / dH)] = red.scale;
  }
  return coeffs;
}

}  // namespace pblab
