#include "pblab/family_sampling.hpp"

#include "pblab/lattice.hpp"
#include "pblab/poly_gcd.hpp"
#include "pblab/sampling.hpp"

namespace pblab {

std::optional<int> required_fs_multiplicity(int d, int N, int t, int i) {
  require(i >= 1 && i <= N, errc::invalid_parameters, "threshold i out of range");
  int s = d - 1;
  for (int c = 0; c * t <= s; ++c) {
    bool ok = true;
    for (int j = i; j < N && ok; ++j) {
      LatticeProblem p;
      p.j = j;
      p.N = N;
      p.d = d;
      p.t = t;
      p.weight.assign(static_cast<size_t>(s) + 1, Rational(0));
      p.weight.front() = Rational(1);
      p.weight.back() = Rational(c);
      if (brute_force_min(p).value < Rational(0)) ok = false;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

FamilySpec random_family(Rng& rng, int nvars, int d, int N, int t, int i) {
  auto c = required_fs_multiplicity(d, N, t, i);
  require(c.has_value(), errc::invalid_parameters,
          "no admissible F_s multiplicity for threshold i=" + std::to_string(i));
  int s = d - 1;

  HomogeneousPoly h = random_base_form(rng, nvars, t);
  std::vector<Poly> f_components;
  for (int m = 1; m < s; ++m) {
    // Lower components are unconstrained; leave some zero for variety.
    f_components.push_back(rng.chance(3, 4) ? random_homogeneous(rng, nvars, m, 2) : Poly(nvars));
  }
  int cofactor_deg = s - *c * t;
  Poly cofactor = cofactor_deg == 0 ? Poly::constant(nvars, rng.rational(9, 4, true))
                                    : random_homogeneous(rng, nvars, cofactor_deg, 2);
  if (s >= 1) f_components.push_back(pow(h.poly(), *c) * cofactor);

  std::map<int, Rational> a;
  for (int j = i; j <= N; ++j)
    if (j % t == 0 && rng.chance(4, 5)) a[j] = rng.rational(9, 4, false);
  a[N] = rng.rational(9, 4, true);

  return FamilySpec(nvars, d, N, t, std::move(h), std::move(f_components), std::move(a));
}

DependenceDraw random_dependence_family(Rng& rng, int nvars, int d1, int k, int t) {
  require(d1 >= 2, errc::invalid_parameters, "d1 must be >= 2");
  require(k >= 1, errc::invalid_parameters, "k must be >= 1");
  require(t >= 1 && d1 % t == 0, errc::invalid_parameters, "t must divide d1");
  int d = 2 * d1;
  int s = d - 1;
  int N = 2 * d1 * k + d1;
  int rtilde = d1 / t;

  HomogeneousPoly h = random_base_form(rng, nvars, t);
  while (!is_square_free(h.poly())) h = random_base_form(rng, nvars, t);

  Poly f_tilde = random_homogeneous(rng, nvars, d1 - 1, 2);
  int hat_deg = s - t - 1;
  Poly f_hat = hat_deg == 0 ? Poly::constant(nvars, rng.rational(9, 4, true))
                            : random_homogeneous(rng, nvars, hat_deg, 2);

  std::vector<Poly> f_components;
  for (int m = 1; m <= s - 2; ++m)
    f_components.push_back(rng.chance(1, 2) ? random_homogeneous(rng, nvars, m, 2) : Poly(nvars));
  f_components.push_back((f_tilde * f_tilde + h.poly() * f_hat).scaled(Rational(1, 4)));
  f_components.push_back(pow(h.poly(), rtilde) * f_tilde);

  std::map<int, Rational> a{{N, rng.rational(9, 4, true)}};
  return DependenceDraw{
      FamilySpec(nvars, d, N, t, std::move(h), std::move(f_components), std::move(a)), f_tilde,
      f_hat};
}

}  // namespace pblab
