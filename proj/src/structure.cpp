#include "pblab/structure.hpp"

#include <algorithm>
#include <map>

#include "pblab/coeff_formulas.hpp"
#include "pblab/linalg.hpp"
#include "pblab/poly_gcd.hpp"

namespace pblab {

namespace {

bool top_forms_match(const FamilySpec& spec, const Poly& F, const Poly& G) {
  Poly fd = F.homogeneous_component(spec.d());
  Poly gn = G.homogeneous_component(spec.N());
  return fd == pow(spec.h().poly(), spec.r()) &&
         gn == pow(spec.h().poly(), spec.N() / spec.t()).scaled(spec.a(spec.N()));
}

long effective_threshold_i(const Poly& F, const Poly& G, int d) {
  Degree bd = bracket_degree(F, G);
  if (bd.is_neg_infinity()) return 1;
  return std::max<long>(1, bd.value() - d + 1);
}

}  // namespace

DivisibilityReport check_divisibility(const FamilySpec& spec, const Poly& F, const Poly& G, int k) {
  require(k >= 0, errc::invalid_parameters, "k must be >= 0");
  int d = spec.d(), N = spec.N(), t = spec.t(), s = spec.s();

  DivisibilityReport rep;
  rep.effective_i = effective_threshold_i(F, G, d);
  rep.threshold = Rational(static_cast<long>(s - k) * N, d - k);

  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.hypotheses.push_back({std::move(name), ok, std::move(detail)});
  };

  add("top_forms_match_family", top_forms_match(spec, F, G),
      "F_d = h^{d/t} and G_N = a_N h^{N/t}");
  add("N_not_multiple_of_d", N % d != 0, "N mod d = " + std::to_string(N % d));
  add("k_bound", 2 * k * t < d, "2kt < d");
  bool sf = t == 1 || is_square_free(spec.h().poly());
  add("h_square_free", sf, t == 1 ? "deg h = 1" : "checked via gcd with partials");
  add("bracket_degree_below_threshold", Rational(rep.effective_i) < rep.threshold,
      "least i with deg[F,G] < d+i is " + std::to_string(rep.effective_i));

  rep.applicable = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                               [](const Hypothesis& h) { return h.ok; });
  if (!rep.applicable) return rep;

  Poly fs = F.homogeneous_component(s);
  auto q = exact_divide(pow(spec.h().poly(), k + 1), fs);
  rep.conclusion = q.has_value();
  if (q) rep.cofactor = std::move(*q);
  return rep;
}

DependenceReport check_dependence(const FamilySpec& spec, const Poly& F, const Poly& G) {
  int d = spec.d(), N = spec.N(), t = spec.t(), s = spec.s();
  require(d % 2 == 0 && d / 2 >= 2, errc::invalid_parameters, "requires d = 2*d1 with d1 >= 2");
  int d1 = d / 2;
  require(d1 % t == 0, errc::invalid_parameters, "t must divide d1");
  require(N % d1 == 0 && (N / d1) % 2 == 1 && N / d1 >= 3, errc::invalid_parameters,
          "requires N = d1*(2k+1) with k >= 1");
  int k = (N / d1 - 1) / 2;
  require(top_forms_match(spec, F, G), errc::invalid_parameters,
          "top components must be h^{d/t} and a_N h^{N/t}");
  require(is_square_free(spec.h().poly()), errc::invalid_parameters, "h must be square-free");

  Degree bd = bracket_degree(F, G);
  require(bd < Degree(d + N - 2 * k - 2), errc::invalid_parameters,
          "requires deg[F,G] < d+N-2k-2 = " + std::to_string(d + N - 2 * k - 2));

  int rtilde = d1 / t;
  Poly fs = F.homogeneous_component(s);
  auto f_tilde = exact_divide(pow(spec.h().poly(), rtilde), fs);
  if (!f_tilde)
    fail(errc::non_divisible, "F_s is not divisible by h^{d1/t}; dependence hypotheses are violated");

  DependenceReport rep;
  rep.k = k;
  rep.d1 = d1;
  rep.f_tilde = *f_tilde;

  Poly lhs = F.homogeneous_component(s - 1).scaled(Rational(4)) - rep.f_tilde * rep.f_tilde;
  auto f_hat = exact_divide(spec.h().poly(), lhs);
  rep.relation_holds = f_hat.has_value();
  if (f_hat) rep.f_hat = std::move(*f_hat);
  return rep;
}

BinomialReport binomial_identity(int d1, int k, int t, const Rational& a_N) {
  require(d1 >= 2, errc::invalid_parameters, "d1 must be >= 2");
  require(k >= 1, errc::invalid_parameters, "k must be >= 1");
  require(t >= 1 && d1 % t == 0, errc::invalid_parameters, "t must divide d1");
  require(!a_N.is_zero(), errc::invalid_parameters, "a_N must be nonzero");

  int d = 2 * d1;
  int s = d - 1;
  int N = 2 * d1 * k + d1;
  int rtilde = d1 / t;
  std::map<int, Rational> a{{N, a_N}};

  auto segment_index = [&](int l) {
    std::vector<int> rest(static_cast<size_t>(s), 0);
    rest[static_cast<size_t>(s - 2)] = l;
    rest[static_cast<size_t>(s - 1)] = 2 * k + 2 - 2 * l;
    return IndexAlpha(static_cast<long>(-2 * k - 3 + 2 * l) * rtilde, std::move(rest));
  };

  Rational base = coeff_c_value(segment_index(0), d, t, N, a);
  BinomialReport rep;
  for (int l = 0; l <= k + 1; ++l) {
    BinomialCase bc;
    bc.l = l;
    bc.index = segment_index(l);
    bc.lhs = coeff_c_value(bc.index, d, t, N, a);
    bc.rhs = pow(Rational(-4), l) * Rational(binomial(static_cast<unsigned long>(k + 1),
                                                      static_cast<unsigned long>(l))) *
             base;
    bc.equal = bc.lhs == bc.rhs;
    if (!bc.equal) rep.all_equal = false;
    rep.cases.push_back(std::move(bc));
  }
  return rep;
}

namespace {

void enumerate_monomials_rec(int nvars, int var, int remaining, std::vector<int>& exps,
                             std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[static_cast<size_t>(var)] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<size_t>(var)] = e;
    enumerate_monomials_rec(nvars, var + 1, remaining - e, exps, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  enumerate_monomials_rec(nvars, 0, deg, exps, out);
  return out;
}

}  // namespace

OracleResult min_bracket_degree_over_g(const Poly& F, int N, const HomogeneousPoly& h,
                                       const Rational& a_N, int degree_floor, size_t unknown_cap) {
  int n = F.nvars();
  require(n >= 2, errc::invalid_parameters, "oracle needs at least two variables");
  require(h.nvars() == n, errc::nvars_mismatch, "h variable count");
  require(!F.is_constant(), errc::constant_input, "F must be nonconstant");
  int d = static_cast<int>(F.degree().value());
  int t = h.degree();
  require(t >= 1 && d % t == 0 && N % t == 0, errc::invalid_parameters, "deg h must divide d and N");
  require(N >= d, errc::invalid_parameters, "N must be >= deg F");
  require(F.homogeneous_component(d) == pow(h.poly(), d / t), errc::invalid_parameters,
          "top component of F must equal h^{d/t}");
  require(!a_N.is_zero(), errc::invalid_parameters, "a_N must be nonzero");
  require(degree_floor >= 1, errc::invalid_parameters, "degree floor must be >= 1");

  std::vector<Monomial> unknowns;
  for (int deg = 1; deg <= N - 1; ++deg)
    for (auto& m : monomials_of_degree(n, deg)) unknowns.push_back(std::move(m));
  require(unknowns.size() <= unknown_cap, errc::resource_limit,
          "unknown coefficient count " + std::to_string(unknowns.size()) + " exceeds cap");

  Poly fixed_top = pow(h.poly(), N / t).scaled(a_N);
  BracketElement fixed_bracket = poisson_bracket(F, fixed_top);

  std::vector<BracketElement> unknown_brackets;
  unknown_brackets.reserve(unknowns.size());
  for (const auto& m : unknowns)
    unknown_brackets.push_back(poisson_bracket(F, Poly::term(n, m, Rational(1))));

  // Row key: (basis pair, monomial of the coefficient polynomial). Rows
  // are grouped by the coefficient monomial's total degree so the system
  // for threshold i keeps exactly the rows of degree >= d+i-2.
  struct RowKey {
    std::pair<int, int> pair;
    Monomial mono;
  };
  std::map<int, std::vector<RowKey>, std::greater<int>> rows_by_degree;
  {
    std::map<std::pair<int, int>, std::map<Monomial, bool, GrlexLess>> seen;
    auto note = [&](const BracketElement& be) {
      for (const auto& [key, poly] : be.coefficients())
        for (const auto& [mono, c] : poly.terms()) seen[key].emplace(mono, true);
    };
    note(fixed_bracket);
    for (const auto& be : unknown_brackets) note(be);
    for (const auto& [key, monos] : seen)
      for (const auto& [mono, _] : monos)
        if (mono.total_degree() >= d + degree_floor - 2)
          rows_by_degree[mono.total_degree()].push_back({key, mono});
  }

  OracleResult out;
  out.unknown_count = unknowns.size();

  for (int i = N; i >= degree_floor; --i) {
    QMatrix A;
    QVector b;
    for (const auto& [deg, keys] : rows_by_degree) {
      if (deg < d + i - 2) break;
      for (const auto& rk : keys) {
        QVector row;
        row.reserve(unknowns.size());
        for (const auto& be : unknown_brackets)
          row.push_back(be.coefficient(rk.pair.first, rk.pair.second).coefficient(rk.mono));
        A.push_back(std::move(row));
        b.push_back(-fixed_bracket.coefficient(rk.pair.first, rk.pair.second).coefficient(rk.mono));
      }
    }
    auto sol = linear_solve(A, b);
    out.attempts.push_back({i, sol.has_value()});
    if (sol) {
      out.least_feasible_i = i;
      Poly witness = fixed_top;
      for (size_t u = 0; u < unknowns.size(); ++u) witness.add_term(unknowns[u], sol->particular[u]);
      out.witness = std::move(witness);
    } else {
      break;  // feasibility is monotone in i: everything below fails too
    }
  }
  // Record the remaining thresholds as infeasible without re-solving.
  if (!out.attempts.empty() && !out.attempts.back().feasible)
    for (int i = out.attempts.back().i - 1; i >= degree_floor; --i) out.attempts.push_back({i, false});

  return out;
}

}  // namespace pblab
