#include "pblab/bracket.hpp"

#include <numeric>
#include <vector>

namespace pblab {

BracketElement BracketElement::operator-() const {
  BracketElement r(nvars_);
  for (const auto& [key, p] : coeffs_) r.coeffs_.emplace(key, -p);
  return r;
}

BracketElement& BracketElement::operator+=(const BracketElement& o) {
  require(nvars_ == o.nvars_, errc::nvars_mismatch, "bracket element sum");
  for (const auto& [key, p] : o.coeffs_) {
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      coeffs_.emplace(key, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

BracketElement BracketElement::scaled(const Rational& c) const {
  BracketElement r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [key, p] : coeffs_) r.coeffs_.emplace(key, p.scaled(c));
  return r;
}

BracketElement BracketElement::multiplied(const Poly& q) const {
  BracketElement r(nvars_);
  if (q.is_zero()) return r;
  for (const auto& [key, p] : coeffs_) {
    Poly prod = p * q;
    if (!prod.is_zero()) r.coeffs_.emplace(key, std::move(prod));
  }
  return r;
}

BracketElement poisson_bracket(const Poly& F, const Poly& G) {
  require(F.nvars() == G.nvars(), errc::nvars_mismatch, "poisson bracket");
  int n = F.nvars();
  require(n >= 2, errc::invalid_parameters, "poisson bracket needs at least two variables");

  std::vector<Poly> dF, dG;
  dF.reserve(static_cast<size_t>(n));
  dG.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    dF.push_back(F.partial_derivative(v));
    dG.push_back(G.partial_derivative(v));
  }

  BracketElement out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto si = static_cast<size_t>(i);
      auto sj = static_cast<size_t>(j);
      out.set_coefficient(i, j, dF[si] * dG[sj] - dF[sj] * dG[si]);
    }
  return out;
}

Degree bracket_degree(const Poly& F, const Poly& G) { return poisson_bracket(F, G).degree(); }

Poly jacobian_determinant(const Poly& F, const Poly& G) {
  require(F.nvars() == 2 && G.nvars() == 2, errc::invalid_parameters,
          "jacobian determinant accessor is the two-variable case");
  return poisson_bracket(F, G).coefficient(0, 1);
}

SUBoundData su_bound(const Poly& f, const Poly& g, const Poly& P) {
  require(!f.is_constant() && !g.is_constant(), errc::constant_input,
          "degree bound needs nonconstant f and g");
  require(P.nvars() == 2, errc::invalid_parameters, "P must be a polynomial in two formal variables");
  require(!P.is_zero(), errc::invalid_parameters, "P must be nonzero");

  long df = f.degree().value();
  long dg = g.degree().value();
  Degree db = bracket_degree(f, g);
  if (db.is_neg_infinity())
    fail(errc::not_applicable, "f and g have vanishing bracket (algebraically dependent pair)");

  SUBoundData out;
  out.gcd_degs = std::gcd(df, dg);
  // deg(fg) - deg[f,g] is the defect of the bracket degree bound.
  Rational slack(df + dg - db.value());
  out.deficiency = Rational(1) - (Rational(out.gcd_degs) - slack) / Rational(df * dg);

  long w = 0;
  for (const auto& [m, c] : P.terms())
    w = std::max(w, static_cast<long>(m.exponent(0)) * df + static_cast<long>(m.exponent(1)) * dg);
  out.weighted_degree = w;
  out.lower_bound = out.deficiency * Rational(w);
  out.composed_degree = P.compose({f, g}).degree();
  return out;
}

}  // namespace pblab
