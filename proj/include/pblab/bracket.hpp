#ifndef PBLAB_BRACKET_HPP
#define PBLAB_BRACKET_HPP

#include <map>
#include <utility>

#include "pblab/poly.hpp"

namespace pblab {

/// Value in the free module spanned by the formal symbols [x_i,x_j] for
/// i < j, each of degree 2, with polynomial coefficients. Keeping the
/// basis explicit preserves the degree convention exactly instead of
/// collapsing the bracket to a single polynomial.
class BracketElement {
 public:
  using CoeffMap = std::map<std::pair<int, int>, Poly>;

  explicit BracketElement(int nvars) : nvars_(nvars) {
    require(nvars >= 2, errc::invalid_parameters, "bracket needs at least two variables");
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& coefficients() const { return coeffs_; }

  /// Coefficient at the basis symbol with 0-based indices i < j.
  Poly coefficient(int i, int j) const {
    require(0 <= i && i < j && j < nvars_, errc::index_out_of_range, "bracket basis pair");
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Poly::zero(nvars_) : it->second;
  }

  void set_coefficient(int i, int j, Poly p) {
    require(0 <= i && i < j && j < nvars_, errc::index_out_of_range, "bracket basis pair");
    if (p.is_zero())
      coeffs_.erase({i, j});
    else
      coeffs_.insert_or_assign({i, j}, std::move(p));
  }

  /// 2 + max coefficient degree; -infinity when no coefficient survives.
  Degree degree() const {
    Degree best = Degree::neg_infinity();
    for (const auto& [key, p] : coeffs_)
      if (best < p.degree()) best = p.degree();
    return best + 2;
  }

  BracketElement operator-() const;
  BracketElement& operator+=(const BracketElement& o);
  friend BracketElement operator+(BracketElement a, const BracketElement& b) { return a += b; }
  friend BracketElement operator-(BracketElement a, const BracketElement& b) { return a += -b; }
  BracketElement scaled(const Rational& c) const;
  BracketElement multiplied(const Poly& p) const;

  friend bool operator==(const BracketElement& a, const BracketElement& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int nvars_;
  CoeffMap coeffs_;
};

/// Sum over i<j of (dF/dx_i dG/dx_j - dF/dx_j dG/dx_i) [x_i,x_j].
BracketElement poisson_bracket(const Poly& F, const Poly& G);

Degree bracket_degree(const Poly& F, const Poly& G);

/// Two-variable case: the single coefficient at [x_1,x_2], which is the
/// Jacobian determinant of (F, G).
Poly jacobian_determinant(const Poly& F, const Poly& G);

struct SUBoundData {
  long gcd_degs = 0;
  Rational deficiency;    // D(f,g)
  long weighted_degree = 0;  // w-degree of P with w(x)=deg f, w(y)=deg g
  Rational lower_bound;   // D(f,g) * w(P)
  Degree composed_degree; // deg P(f,g), for cross-checking
};

/// Subalgebra-membership degree bound in the Makar-Limanov/Yu form:
/// deg P(f,g) >= D(f,g) * w(P) with
/// D(f,g) = 1 - (gcd(deg f,deg g) - (deg(fg) - deg[f,g])) / (deg f deg g).
/// f, g must be nonconstant and P lives in two formal variables. A
/// vanishing bracket (algebraically dependent pair) is reported as
/// errc::not_applicable.
SUBoundData su_bound(const Poly& f, const Poly& g, const Poly& P);

}  // namespace pblab

#endif
