#ifndef PBLAB_FAMILY_SAMPLING_HPP
#define PBLAB_FAMILY_SAMPLING_HPP

#include <optional>

#include "pblab/family.hpp"
#include "pblab/poly.hpp"
#include "pblab/rng.hpp"

namespace pblab {

/// Smallest multiplicity c such that building F_s as h^c times a cofactor
/// keeps every index contributing to G_j, j in [i, N], individually
/// polynomial: min over those j of min (alpha_0 + c*alpha_s) >= 0,
/// certified by brute-force lattice minimization. nullopt when no c with
/// c*t <= s works, i.e. the threshold i genuinely needs cancellation
/// between components.
std::optional<int> required_fs_multiplicity(int d, int N, int t, int i);

/// Random family admissible for build_g at threshold i: random base form
/// h, F_s = h^c * (random cofactor) with c from
/// required_fs_multiplicity, random lower components and random
/// constants a_j (zero at non-multiples of t, a_N nonzero).
FamilySpec random_family(Rng& rng, int nvars, int d, int N, int t, int i);

/// Family with the two-top-component relation baked in, for d = 2*d1 and
/// N = d1*(2k+1): F_s = h^{d1/t} * f_tilde and
/// 4*F_{s-1} = f_tilde^2 + h*f_hat, with a_N the only nonzero constant so
/// the component construction stays polynomial down to threshold
/// N - 2k - 2.
struct DependenceDraw {
  FamilySpec spec;
  Poly f_tilde;
  Poly f_hat;
};

DependenceDraw random_dependence_family(Rng& rng, int nvars, int d1, int k, int t);

}  // namespace pblab

#endif
