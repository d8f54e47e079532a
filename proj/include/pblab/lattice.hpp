#ifndef PBLAB_LATTICE_HPP
#define PBLAB_LATTICE_HPP

#include <vector>

#include "pblab/family.hpp"
#include "pblab/rational.hpp"

namespace pblab {

/// Minimize sum w_l alpha_l over the index set for (j, N, d, t); weights
/// are rational and indexed 0..s.
struct LatticeProblem {
  int j = 0, N = 0, d = 0, t = 1;
  std::vector<Rational> weight;  // size s+1

  int s() const { return d - 1; }
};

struct MinResult {
  Rational value;
  std::vector<IndexAlpha> argmins;  // sorted lexicographically, complete

  bool unique() const { return argmins.size() == 1; }
};

/// Exhaustive minimization; the certified oracle for all closed forms.
MinResult brute_force_min(const LatticeProblem& p);

/// min alpha_0 over the t=1 index set: value d*j - s*N, attained exactly
/// at (d*j - s*N, 0, ..., 0, N-j).
MinResult predicted_min_alpha0(int j, int N, int d);

/// min alpha_0 + k*alpha_s over the t=1 index set for d > 2k: value
/// (d-k)*j - (s-k)*N at the same unique point.
MinResult predicted_min_alpha0_k_alphas(int j, int N, int d, int k);

/// min alpha_0 + k*alpha_s over the general-t index set for d > 2kt:
/// value ((d-kt)*j - (s-kt)*N)/t at ((d*j - s*N)/t, 0, ..., 0, N-j).
MinResult predicted_min_t(int j, int N, int d, int t, int k);

/// Boundary case d = 2*d1, N = d1*(2k+1): the weight alpha_0 +
/// (d1/t)*alpha_s attains its minimum on a whole segment
///   {((d*j - s*N)/t + (d/t)*l, 0, ..., 0, l, N-j-2l) : 0 <= 2l <= N-j}.
MinResult predicted_min_tie(int j, int N, int d1, int t);

/// Vertices of the simplex  { alpha in R_+^s : sum (d-l) alpha_l <= N-j }
/// together with the values of  f_beta(alpha) = j - sum (l - beta_l) alpha_l
/// at each vertex, and the closed-form minimum claims for beta =
/// (0,...,0,beta_s): unique vertex minimizer when 2*beta_s < d, a segment
/// of minimizers when 2*beta_s = d.
struct SimplexData {
  std::vector<std::vector<Rational>> vertices;  // origin first, then l = 1..s
  std::vector<Rational> f_at_vertices;

  bool has_min_claim = false;     // beta of the shape (0,...,0,beta_s) with 2*beta_s <= d
  bool tie_claim = false;         // 2*beta_s == d
  Rational min_value;             // j - (s - beta_s)(N - j)
  std::vector<std::vector<Rational>> min_points;  // vertex, or both segment endpoints
};

SimplexData simplex_data(int j, int N, int d, const std::vector<int>& beta);

/// Lift of a simplex lattice point into the t=1 index set:
/// (alpha_1..alpha_s) -> (j - sum l alpha_l, alpha_1..alpha_s).
IndexAlpha phi_map(int j, const std::vector<int>& alphas);

/// Rescaling bijection onto the general-t set: divides alpha_0 by t
/// (alpha_0 must be a multiple of t).
IndexAlpha psi_map(const IndexAlpha& alpha, int t);

/// Integer points of the simplex, the phi preimage of the t=1 index set.
std::vector<std::vector<int>> simplex_lattice_points(int j, int N, int d);

}  // namespace pblab

#endif
