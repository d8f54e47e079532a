#ifndef PBLAB_COEFF_FORMULAS_HPP
#define PBLAB_COEFF_FORMULAS_HPP

#include <map>
#include <optional>
#include <vector>

#include "pblab/family.hpp"

namespace pblab {

/// All indices alpha = (alpha_0, ..., alpha_s), s = d-1, with
///   t*alpha_0 + 1*alpha_1 + 2*alpha_2 + ... + s*alpha_s = j   and
///   t*alpha_0 + d*(alpha_1 + ... + alpha_s) <= N,
/// ordered lexicographically on the tuple. alpha_0 may be negative.
std::vector<IndexAlpha> enumerate_indices(int j, int N, int d, int t);

/// Closed-form coefficient
///   c^{(j)}_alpha = prod_{k=1..A}(alpha_0 + r k)
///                   / (prod_{i=1..alpha_1} r i) ... (prod_{i=1..alpha_s} r i)
///                   * a_{t alpha_0 + d A}
/// with A = alpha_1 + ... + alpha_s and r = d/t; empty products are 1.
/// Only the parameters (d, t, N) and the constants matter, so this core
/// evaluator takes them directly. Constants absent from `a` are zero.
Rational coeff_c_value(const IndexAlpha& alpha, int d, int t, int N, const std::map<int, Rational>& a);

/// Membership-checked variant: alpha must lie in the index set for
/// (j, N, d, t) of `spec` or errc::invalid_parameters is raised.
Rational coeff_c(int j, const IndexAlpha& alpha, const FamilySpec& spec);

/// Assembles the degree-j component
///   G_j = sum over the index set of c^{(j)}_alpha F_1^{alpha_1} ... F_s^{alpha_s} h^{alpha_0}.
/// Negative powers of h are never formed: the sum is accumulated over a
/// common non-negative power h^m and divided once at the end; a failing
/// division certifies that the family violates the construction's
/// divisibility hypotheses and raises errc::non_divisible. Nonzero
/// coefficients are recorded into `table` when given.
Poly build_component(const FamilySpec& spec, int j, CoefficientTable* table = nullptr);

/// G = (supplied lower components below i) + sum_{j=i..N} build_component(j).
/// `lower`, when present, lists G_1..G_{i-1} (each homogeneous of its
/// degree or zero); the default is all-zero lower components.
Poly build_g(const FamilySpec& spec, int i, const std::vector<Poly>* lower = nullptr,
             CoefficientTable* table = nullptr);

struct ConditionWitness {
  std::string condition;
  int window = 0;
  IndexAlpha alpha;
  int k = 0;
  int l = 0;
  Rational lhs, rhs;
};

/// Result of checking the three coefficient-array identities that drive
/// the downward induction on the components of G:
///   c1: (alpha_k+1) c^{(w+s-l)}_{alpha+e_k} = (alpha_l+1) c^{(w+s-k)}_{alpha+e_l}
///   c2: c^{(w+l-1)}_{alpha-r e_0} = (alpha_0/(r alpha_k)) c^{(w+l+s-k)}_{alpha-e_k}  (alpha_k > 0)
///   p1: c^{(w-1)}_{alpha-r e_0} = (alpha_0/(r alpha_l)) c^{(w+s-l)}_{alpha-e_l}      (alpha_l > 0)
/// quantified over every window w at or above the construction threshold
/// and over the table's support extended by one shift in each direction.
struct ConditionReport {
  bool c1 = true, c2 = true, p1 = true;
  std::optional<ConditionWitness> first_failure;
  bool all() const { return c1 && c2 && p1; }
};

ConditionReport check_conditions(const CoefficientTable& table, int i, int s, int r);

}  // namespace pblab

#endif
