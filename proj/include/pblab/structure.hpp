#ifndef PBLAB_STRUCTURE_HPP
#define PBLAB_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pblab/bracket.hpp"
#include "pblab/family.hpp"
#include "pblab/poly.hpp"

namespace pblab {

struct Hypothesis {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Outcome of the divisibility check: when every hypothesis holds
/// (degrees, threshold, square-freeness), F_s must be a multiple of
/// h^{k+1} and the cofactor is returned. With a failed hypothesis the
/// conclusion is not asserted; an exact-division failure under valid
/// hypotheses is reported as conclusion=false (a violated theorem, which
/// the caller should treat as a defect certificate).
struct DivisibilityReport {
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;  // all hypotheses hold
  bool conclusion = false;  // h^{k+1} divides F_s (checked only when applicable)
  std::optional<Poly> cofactor;
  long effective_i = 0;     // least i with deg[F,G] < d+i
  Rational threshold;       // (s-k)/(d-k) * N
};

DivisibilityReport check_divisibility(const FamilySpec& spec, const Poly& F, const Poly& G, int k);

/// Extraction of the forced relation between the two highest proper
/// components of F when d = 2*d1 and N = d1*(2k+1): F_s = h^{d1/t} * Ftilde
/// and 4*F_{s-1} - Ftilde^2 = h * Fhat. Shape violations raise
/// errc::invalid_parameters; a failing F_s extraction raises
/// errc::non_divisible (it certifies a violated hypothesis). The final
/// relation is report-valued. The sign of Ftilde is whatever exact
/// division returns; both signs square to the same relation.
struct DependenceReport {
  Poly f_tilde = Poly(1);
  std::optional<Poly> f_hat;
  bool relation_holds = false;
  int k = 0;
  int d1 = 0;
};

DependenceReport check_dependence(const FamilySpec& spec, const Poly& F, const Poly& G);

/// Verifies, for l = 0..k+1, that the coefficient at the minimizing
/// segment index with parameter l equals (-4)^l * C(k+1, l) times the
/// coefficient at l = 0, evaluating both sides through the closed form.
struct BinomialCase {
  int l = 0;
  IndexAlpha index;
  Rational lhs, rhs;
  bool equal = false;
};

struct BinomialReport {
  bool all_equal = true;
  std::vector<BinomialCase> cases;
};

BinomialReport binomial_identity(int d1, int k, int t, const Rational& a_N);

/// Independent linear-algebra oracle: over all G = G_1 + ... + G_{N-1} +
/// a_N h^{N/t} with unknown lower coefficients, decides for each i
/// whether deg[F,G] < d+i is achievable. The bracket is linear in G, and
/// "deg[F,G] < d+i" is exactly the vanishing of every basis-coefficient
/// component of degree >= d+i-2 (the formal symbols carry degree 2), so
/// each i reduces to one exact linear solve. Feasibility is monotone
/// increasing in i; the report lists each attempted i, the least feasible
/// one, and a deterministic witness (free variables zero).
struct OracleAttempt {
  int i = 0;
  bool feasible = false;
};

struct OracleResult {
  std::vector<OracleAttempt> attempts;  // descending i
  std::optional<int> least_feasible_i;
  std::optional<Poly> witness;
  size_t unknown_count = 0;
};

OracleResult min_bracket_degree_over_g(const Poly& F, int N, const HomogeneousPoly& h,
                                       const Rational& a_N, int degree_floor,
                                       size_t unknown_cap = 5000);

}  // namespace pblab

#endif
