#include "pblab/poly_gcd.hpp"

#include <algorithm>
#include <map>

namespace pblab {

namespace {

// First variable (smallest index) occurring with positive exponent.
std::optional<int> lowest_variable(const Poly& p) {
  std::optional<int> best;
  for (const auto& [m, c] : p.terms())
    for (int v = 0; v < p.nvars(); ++v)
      if (m.exponent(v) > 0) {
        if (!best || v < *best) best = v;
        break;
      }
  return best;
}

int degree_in(const Poly& p, int var) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(var));
  return d;
}

// P viewed as a univariate polynomial in `var`; coefficients keep the
// ambient variable count but do not involve `var`.
std::map<int, Poly> as_univariate(const Poly& p, int var) {
  std::map<int, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(var);
    auto exps = m.exponents();
    exps[static_cast<size_t>(var)] = 0;
    auto [it, _] = out.try_emplace(e, Poly(p.nvars()));
    it->second.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Poly univariate_coefficient(const Poly& p, int var, int e) {
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(var) != e) continue;
    auto exps = m.exponents();
    exps[static_cast<size_t>(var)] = 0;
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Poly var_power(int nvars, int var, int e) {
  auto exps = std::vector<int>(static_cast<size_t>(nvars), 0);
  exps[static_cast<size_t>(var)] = e;
  return Poly::term(nvars, Monomial(std::move(exps)), Rational(1));
}

Poly content_in(const Poly& p, int var);

// Pseudo-remainder of A by B in `var` (deg_var A >= deg_var B >= 1).
Poly pseudo_remainder(Poly A, const Poly& B, int var) {
  int db = degree_in(B, var);
  Poly lcB = univariate_coefficient(B, var, db);
  while (!A.is_zero()) {
    int da = degree_in(A, var);
    if (da < db) break;
    Poly lcA = univariate_coefficient(A, var, da);
    A = A * lcB - B * lcA * var_power(A.nvars(), var, da - db);
  }
  return A;
}

Poly primitive_part(const Poly& p, int var, const Poly& content) {
  auto q = exact_divide(content, p);
  require(q.has_value(), errc::invariant_violation, "content must divide its polynomial");
  return *q;
}

Poly content_in(const Poly& p, int var) {
  Poly acc(p.nvars());
  for (auto& [e, coeff] : as_univariate(p, var)) {
    acc = acc.is_zero() ? coeff : gcd_multivariate(acc, coeff);
    if (acc.is_constant() && !acc.is_zero()) return Poly::one(p.nvars());
  }
  return normalize_leading(acc);
}

}  // namespace

Poly normalize_leading(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coefficient().inverse());
}

Poly gcd_multivariate(const Poly& P, const Poly& Q) {
  require(P.nvars() == Q.nvars(), errc::nvars_mismatch, "gcd");
  require(!(P.is_zero() && Q.is_zero()), errc::invalid_parameters, "gcd of two zero polynomials");
  if (P.is_zero()) return normalize_leading(Q);
  if (Q.is_zero()) return normalize_leading(P);
  if (P.is_constant() || Q.is_constant()) return Poly::one(P.nvars());

  auto vp = lowest_variable(P), vq = lowest_variable(Q);
  int var = std::min(vp.value(), vq.value());

  Poly contP = content_in(P, var);
  Poly contQ = content_in(Q, var);
  Poly g = gcd_multivariate(contP, contQ);

  Poly a = primitive_part(P, var, contP);
  Poly b = primitive_part(Q, var, contQ);
  if (degree_in(a, var) < degree_in(b, var)) std::swap(a, b);

  // Primitive pseudo-remainder sequence; both operands stay primitive in
  // `var`, so a vanishing remainder makes the smaller one the gcd part.
  while (true) {
    if (degree_in(b, var) == 0) {
      // b primitive with no occurrence of `var` left: coprime in var.
      return normalize_leading(g);
    }
    Poly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return normalize_leading(g * b);
    a = b;
    b = primitive_part(r, var, content_in(r, var));
  }
}

Poly sqrf(const Poly& h) {
  require(!h.is_zero() && !h.is_constant(), errc::constant_input,
          "square-free part needs a nonconstant polynomial");
  Poly g(h.nvars());
  for (int v = 0; v < h.nvars(); ++v) {
    Poly dv = h.partial_derivative(v);
    if (dv.is_zero()) continue;
    g = g.is_zero() ? gcd_multivariate(h, dv) : gcd_multivariate(g, dv);
    if (g.is_constant()) break;
  }
  require(!g.is_zero(), errc::invariant_violation, "nonconstant polynomial with all partials zero");
  auto q = exact_divide(g, h);
  require(q.has_value(), errc::invariant_violation, "gcd with partials must divide");
  return normalize_leading(*q);
}

bool is_square_free(const Poly& h) {
  require(!h.is_zero() && !h.is_constant(), errc::constant_input,
          "square-free test needs a nonconstant polynomial");
  return sqrf(h) == normalize_leading(h);
}

namespace {

std::optional<Poly> extract_root(const Poly& H, int m) {
  const auto& [lm, lc] = H.leading_term();
  auto exps = lm.exponents();
  for (int& e : exps) {
    if (e % m != 0) return std::nullopt;
    e /= m;
  }
  auto root_lc = nth_root(lc, static_cast<unsigned long>(m));
  if (!root_lc) return std::nullopt;

  Poly g = Poly::term(H.nvars(), Monomial(std::move(exps)), *root_lc);
  Monomial g_lead = g.leading_term().first;
  // Each pass determines the next term of the root from the leading term
  // of the defect H - g^m; H homogeneous keeps every candidate term at
  // degree deg(H)/m, so the monomial count of that degree bounds the loop.
  int root_deg = lm.total_degree() / m;
  size_t guard = binomial(static_cast<unsigned long>(root_deg + H.nvars() - 1),
                          static_cast<unsigned long>(H.nvars() - 1))
                     .get_ui() +
                 2;
  Poly g_lead_pow = pow(Poly::term(H.nvars(), g_lead, g.leading_coefficient()), m - 1);
  GrlexLess less;
  Monomial prev = g_lead;
  while (guard-- > 0) {
    Poly defect = H - pow(g, m);
    if (defect.is_zero()) return g;
    const auto& [dm, dc] = defect.leading_term();
    const auto& [pm, pc] = g_lead_pow.leading_term();
    auto tm = dm.divide(pm);
    if (!tm) return std::nullopt;
    if (!less(*tm, prev)) return std::nullopt;
    prev = *tm;
    g.add_term(*tm, dc / (Rational(m) * pc));
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<HomogeneousPoly, int>> is_proper_power(const HomogeneousPoly& H) {
  require(!H.is_zero() && H.degree() >= 1, errc::constant_input,
          "power test needs a nonconstant homogeneous polynomial");
  int d = H.degree();
  for (int m = d; m >= 2; --m) {
    if (d % m != 0) continue;
    auto g = extract_root(H.poly(), m);
    if (!g) continue;
    if (pow(*g, m) == H.poly()) return std::make_pair(HomogeneousPoly(*g, d / m), m);
  }
  return std::nullopt;
}

}  // namespace pblab
