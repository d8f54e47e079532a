#ifndef PBLAB_POLY_HPP
#define PBLAB_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pblab/degree.hpp"
#include "pblab/monomial.hpp"
#include "pblab/rational.hpp"

namespace pblab {

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// ascending graded-lex order with no zero coefficients stored; the zero
/// polynomial has an empty term map and total degree -infinity.
///
/// Values are immutable in spirit: every operation returns a fresh
/// polynomial, so instances can be shared freely across threads.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Poly(int nvars) : nvars_(nvars) {
    require(nvars >= 1, errc::invalid_parameters, "polynomial needs at least one variable");
  }

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Poly one(int nvars) { return constant(nvars, Rational(1)); }
  static Poly variable(int nvars, int var) {
    Poly p(nvars);
    p.add_term(Monomial::variable(nvars, var), Rational(1));
    return p;
  }
  static Poly term(int nvars, const Monomial& m, const Rational& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  size_t term_count() const { return terms_.size(); }

  Degree degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    return Degree(terms_.rbegin()->first.total_degree());
  }

  /// Highest term under graded-lex order. Error on the zero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const {
    require(!terms_.empty(), errc::invalid_parameters, "leading term of zero polynomial");
    return *terms_.rbegin();
  }
  Rational leading_coefficient() const { return leading_term().second; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial(nvars_)); }

  const TermMap& terms() const { return terms_; }

  /// Adds c*m, dropping the entry when the total cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable `var` (0-based).
  Poly partial_derivative(int var) const;

  /// Graded parts in strictly increasing degree; no zero parts returned,
  /// so the sum of the returned polynomials reproduces the input exactly.
  std::vector<std::pair<int, Poly>> homogeneous_components() const;
  Poly homogeneous_component(int deg) const;

  bool is_homogeneous() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Substitutes `args[v]` for variable v; all args must share an ambient
  /// variable count, which becomes the result's.
  Poly compose(const std::vector<Poly>& args) const;

 private:
  int nvars_;
  TermMap terms_;
};

Poly pow(const Poly& base, long e);

/// Exact quotient P / divisor, or nullopt when P is not a multiple.
std::optional<Poly> exact_divide(const Poly& divisor, const Poly& P);

}  // namespace pblab

#endif
