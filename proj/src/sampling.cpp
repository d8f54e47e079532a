#include "pblab/sampling.hpp"

#include "pblab/poly_gcd.hpp"

namespace pblab {

Monomial random_monomial(Rng& rng, int nvars, int degree) {
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  for (int unit = 0; unit < degree; ++unit)
    exps[static_cast<size_t>(rng.uniform(0, nvars - 1))] += 1;
  return Monomial(std::move(exps));
}

Poly random_poly(Rng& rng, int nvars, int max_degree, int terms, int coeff_bound, int den_bound) {
  Poly p(nvars);
  for (int i = 0; i < terms; ++i) {
    int deg = static_cast<int>(rng.uniform(0, max_degree));
    p.add_term(random_monomial(rng, nvars, deg), rng.rational(coeff_bound, den_bound, true));
  }
  return p;
}

Poly random_homogeneous(Rng& rng, int nvars, int degree, int terms, int coeff_bound, int den_bound) {
  require(degree >= 0, errc::invalid_parameters, "degree must be >= 0");
  while (true) {
    Poly p(nvars);
    for (int i = 0; i < terms; ++i)
      p.add_term(random_monomial(rng, nvars, degree), rng.rational(coeff_bound, den_bound, true));
    if (!p.is_zero()) return p;
  }
}

Poly random_linear(Rng& rng, int nvars, int coeff_bound, int den_bound) {
  return random_homogeneous(rng, nvars, 1, 2, coeff_bound, den_bound);
}

HomogeneousPoly random_base_form(Rng& rng, int nvars, int degree, int terms, int coeff_bound,
                                 int den_bound) {
  require(degree >= 1, errc::invalid_parameters, "base form degree must be >= 1");
  while (true) {
    Poly p = random_homogeneous(rng, nvars, degree, degree == 1 ? 2 : terms, coeff_bound, den_bound);
    HomogeneousPoly hp(p, degree);
    if (degree == 1 || !is_proper_power(hp).has_value()) return hp;
  }
}

}  // namespace pblab
