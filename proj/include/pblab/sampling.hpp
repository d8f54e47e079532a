#ifndef PBLAB_SAMPLING_HPP
#define PBLAB_SAMPLING_HPP

#include "pblab/homogeneous.hpp"
#include "pblab/poly.hpp"
#include "pblab/rng.hpp"

namespace pblab {

/// Sparse random polynomial of total degree <= max_degree with about
/// `terms` monomials; may come out with fewer after coefficient
/// collisions, never more.
Poly random_poly(Rng& rng, int nvars, int max_degree, int terms, int coeff_bound = 9,
                 int den_bound = 4);

/// Nonzero sparse random homogeneous polynomial of the given degree.
Poly random_homogeneous(Rng& rng, int nvars, int degree, int terms, int coeff_bound = 9,
                        int den_bound = 4);

/// Nonzero linear form.
Poly random_linear(Rng& rng, int nvars, int coeff_bound = 9, int den_bound = 4);

/// Nonzero homogeneous polynomial of the given degree that is not a power
/// of a lower-degree polynomial; suitable as a common factor h.
HomogeneousPoly random_base_form(Rng& rng, int nvars, int degree, int terms = 3,
                                 int coeff_bound = 9, int den_bound = 4);

Monomial random_monomial(Rng& rng, int nvars, int degree);

}  // namespace pblab

#endif
