#include "pblab/selftest.hpp"

#include <sstream>

#include "pblab/bracket.hpp"
#include "pblab/coeff_formulas.hpp"
#include "pblab/family_sampling.hpp"
#include "pblab/h_reduction.hpp"
#include "pblab/lattice.hpp"
#include "pblab/linalg.hpp"
#include "pblab/poly_gcd.hpp"
#include "pblab/poly_io.hpp"
#include "pblab/sampling.hpp"
#include "pblab/structure.hpp"

namespace pblab {

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, detail});
  }

  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name + " (exception)", false, e.what());
    }
  }
};

void ring_axioms(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  std::string detail;
  for (int iter = 0; iter < 20 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(2, 3));
    Poly p = random_poly(rng, n, 4, 4), q = random_poly(rng, n, 4, 4), r = random_poly(rng, n, 4, 4);
    if ((p * q) * r != p * (q * r)) { ok = false; detail = "associativity"; }
    if (p * (q + r) != p * q + p * r) { ok = false; detail = "distributivity"; }
    if (p * q != q * p) { ok = false; detail = "commutativity"; }
    if (p + q.scaled(Rational(-1)) + q != p) { ok = false; detail = "additive inverse"; }
    if (!p.is_zero() && !q.is_zero() && (p * q).degree() != p.degree() + q.degree()) {
      ok = false;
      detail = "degree multiplicativity";
    }
  }
  suite.check("ring axioms on random polynomials", ok, detail);
}

void bracket_axioms(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  std::string detail;
  for (int iter = 0; iter < 20 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(2, 4));
    Poly p = random_poly(rng, n, 4, 3), q = random_poly(rng, n, 4, 3), r = random_poly(rng, n, 4, 3);
    Rational alpha = rng.rational(9, 4, false), beta = rng.rational(9, 4, false);
    if (poisson_bracket(p, q) != -poisson_bracket(q, p)) { ok = false; detail = "antisymmetry"; }
    BracketElement lin = poisson_bracket(p, q.scaled(alpha) + r.scaled(beta));
    if (lin != poisson_bracket(p, q).scaled(alpha) + poisson_bracket(p, r).scaled(beta)) {
      ok = false;
      detail = "bilinearity";
    }
    BracketElement leibniz = poisson_bracket(p, q * r);
    if (leibniz != poisson_bracket(p, r).multiplied(q) + poisson_bracket(p, q).multiplied(r)) {
      ok = false;
      detail = "Leibniz";
    }
    if (bracket_degree(p, q) > p.degree() + q.degree()) { ok = false; detail = "degree bound"; }
  }
  suite.check("bracket axioms and degree bound", ok, detail);
}

void reduction_roundtrip(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (int iter = 0; iter < 15 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(2, 3));
    HomogeneousPoly h = random_base_form(rng, n, static_cast<int>(rng.uniform(1, 3)));
    Rational a = rng.rational(9, 4, true);
    int k = static_cast<int>(rng.uniform(0, 4));
    Poly p = pow(h.poly(), k).scaled(a);
    auto red = h_reduce(h, HomogeneousPoly(p, k * h.degree()));
    if (red.scale != a || red.exponent != (p.is_zero() ? 0 : k)) ok = false;

    std::vector<Rational> coeffs;
    for (int l = 0; l <= 3; ++l) coeffs.push_back(rng.rational(9, 4, false));
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    Poly sum(n);
    for (size_t l = 0; l < coeffs.size(); ++l)
      sum += pow(h.poly(), static_cast<long>(l)).scaled(coeffs[l]);
    if (express_in_h(h, sum) != coeffs) ok = false;
  }
  suite.check("h-reduction and expansion round-trips", ok);
}

void gcd_properties(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  std::string detail;
  for (int iter = 0; iter < 10 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(2, 3));
    Poly g = random_poly(rng, n, 2, 2), p = random_poly(rng, n, 2, 2), q = random_poly(rng, n, 2, 2);
    if (g.is_zero() || p.is_zero() || q.is_zero()) continue;
    Poly gg = gcd_multivariate(p * g, q * g);
    if (!exact_divide(gg, p * g) || !exact_divide(gg, q * g)) { ok = false; detail = "gcd does not divide"; }
    if (!exact_divide(normalize_leading(g), gg)) { ok = false; detail = "common divisor misses gcd"; }
    auto quot = exact_divide(g, g * q);
    if (!quot || *quot != q) { ok = false; detail = "exact division round-trip"; }
  }
  suite.check("gcd divides both inputs and captures common factors", ok, detail);
}

void power_detection(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (int iter = 0; iter < 10 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(2, 3));
    HomogeneousPoly base = random_base_form(rng, n, static_cast<int>(rng.uniform(1, 2)));
    int m = static_cast<int>(rng.uniform(2, 4));
    auto detected = is_proper_power(HomogeneousPoly(pow(base.poly(), m), m * base.degree()));
    if (!detected || detected->second != m) ok = false;
    if (detected && pow(detected->first.poly(), detected->second) != pow(base.poly(), m)) ok = false;
  }
  suite.check("proper power recovery with re-power verification", ok);
}

void lattice_agreement(Suite& suite) {
  bool ok = true;
  std::string detail;
  for (int d = 2; d <= 5 && ok; ++d)
    for (int N = d; N <= 10 && ok; ++N)
      for (int j = 1; j < N && ok; ++j) {
        LatticeProblem p;
        p.j = j; p.N = N; p.d = d; p.t = 1;
        p.weight.assign(static_cast<size_t>(d), Rational(0));
        p.weight.front() = Rational(1);
        auto brute = brute_force_min(p);
        auto closed = predicted_min_alpha0(j, N, d);
        if (brute.value != closed.value || brute.argmins != closed.argmins) {
          ok = false;
          detail = "d=" + std::to_string(d) + " N=" + std::to_string(N) + " j=" + std::to_string(j);
        }
      }
  suite.check("closed-form lattice minimum matches brute force", ok, detail);
}

void constructive_bound(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  struct Case { int d, t, N, i; };
  bool ok = true;
  std::string detail;
  for (Case cs : {Case{2, 1, 3, 2}, Case{4, 1, 6, 4}, Case{4, 2, 6, 3}}) {
    FamilySpec spec = random_family(rng, 2, cs.d, cs.N, cs.t, cs.i);
    CoefficientTable table;
    Poly g = build_g(spec, cs.i, nullptr, &table);
    if (!(bracket_degree(spec.assemble_f(), g) < Degree(cs.d + cs.i))) {
      ok = false;
      detail = "bracket bound failed at d=" + std::to_string(cs.d);
    }
    if (!check_conditions(table, cs.i, spec.s(), spec.r()).all()) {
      ok = false;
      detail = "coefficient identities failed at d=" + std::to_string(cs.d);
    }
  }
  suite.check("component construction drops the bracket degree", ok, detail);
}

void binomial_cases(Suite& suite) {
  bool ok = true;
  for (int k : {1, 2})
    for (int t : {1, 2})
      if (!binomial_identity(2, k, t, Rational(3, 2)).all_equal) ok = false;
  suite.check("minimizing-segment binomial identity", ok);
}

void parser_roundtrip(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (int iter = 0; iter < 20 && ok; ++iter) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Poly p = random_poly(rng, n, 5, 5);
    if (parse_poly(to_string(p), n) != p) ok = false;
  }
  suite.check("print/parse round-trip", ok);
}

void linear_solver(Suite& suite, uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  for (int iter = 0; iter < 5 && ok; ++iter) {
    size_t rows = static_cast<size_t>(rng.uniform(2, 5));
    size_t cols = static_cast<size_t>(rng.uniform(2, 5));
    QMatrix A(rows, QVector(cols));
    QVector x0(cols);
    for (auto& row : A)
      for (auto& v : row) v = rng.rational(5, 2, false);
    for (auto& v : x0) v = rng.rational(5, 2, false);
    QVector b(rows, Rational(0));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) b[r] += A[r][c] * x0[c];
    auto sol = linear_solve(A, b);
    if (!sol) { ok = false; continue; }
    for (size_t r = 0; r < rows && ok; ++r) {
      Rational acc(0);
      for (size_t c = 0; c < cols; ++c) acc += A[r][c] * sol->particular[c];
      if (acc != b[r]) ok = false;
    }
  }
  suite.check("exact linear solve residual", ok);
}

}  // namespace

std::vector<CheckResult> run_selftest(uint64_t seed) {
  Suite suite;
  suite.guarded("ring axioms", [&] { ring_axioms(suite, seed + 1); });
  suite.guarded("bracket axioms", [&] { bracket_axioms(suite, seed + 2); });
  suite.guarded("h-reduction", [&] { reduction_roundtrip(suite, seed + 3); });
  suite.guarded("gcd", [&] { gcd_properties(suite, seed + 4); });
  suite.guarded("proper powers", [&] { power_detection(suite, seed + 5); });
  suite.guarded("lattice", [&] { lattice_agreement(suite); });
  suite.guarded("construction", [&] { constructive_bound(suite, seed + 6); });
  suite.guarded("binomial identity", [&] { binomial_cases(suite); });
  suite.guarded("parser", [&] { parser_roundtrip(suite, seed + 7); });
  suite.guarded("linear solve", [&] { linear_solver(suite, seed + 8); });
  return suite.results;
}

}  // namespace pblab
