#include "pblab/family.hpp"

#include <sstream>

#include "pblab/poly_gcd.hpp"

namespace pblab {

std::string IndexAlpha::str() const {
  std::ostringstream os;
  os << "(" << alpha0;
  for (int a : alphas) os << "," << a;
  os << ")";
  return os.str();
}

FamilySpec::FamilySpec(int nvars, int d, int N, int t, HomogeneousPoly h,
                       std::vector<Poly> f_components, std::map<int, Rational> a)
    : nvars_(nvars), d_(d), N_(N), t_(t), h_(std::move(h)), f_components_(std::move(f_components)), a_(std::move(a)) {
  require(nvars_ >= 2, errc::invalid_parameters, "family needs at least two variables");
  require(d_ >= 2, errc::invalid_parameters, "d must be >= 2");
  require(N_ >= d_, errc::invalid_parameters, "N must be >= d");
  require(t_ >= 1, errc::invalid_parameters, "t must be >= 1");
  require(d_ % t_ == 0, errc::invalid_parameters, "t must divide d");
  require(N_ % t_ == 0, errc::invalid_parameters, "t must divide N");
  require(h_.nvars() == nvars_, errc::nvars_mismatch, "h variable count");
  require(!h_.is_zero(), errc::invalid_parameters, "h must be nonzero");
  require(h_.degree() == t_, errc::invalid_parameters, "deg h must equal t");
  require(!is_proper_power(h_).has_value(), errc::invalid_parameters,
          "h must not be a power of a lower-degree polynomial");

  require(static_cast<int>(f_components_.size()) == s(), errc::invalid_parameters,
          "expected " + std::to_string(s()) + " components F_1..F_s");
  for (int i = 1; i <= s(); ++i) {
    const Poly& fi = f_components_[static_cast<size_t>(i - 1)];
    require(fi.nvars() == nvars_, errc::nvars_mismatch, "F component variable count");
    if (fi.is_zero()) continue;
    require(fi.is_homogeneous() && fi.degree() == Degree(i), errc::invalid_parameters,
            "F_" + std::to_string(i) + " must be homogeneous of degree " + std::to_string(i) + " or zero");
  }

  for (const auto& [j, c] : a_) {
    require(j >= 1 && j <= N_, errc::invalid_parameters,
            "constant a_" + std::to_string(j) + " outside 1..N");
    if (j % t_ != 0)
      require(c.is_zero(), errc::invalid_parameters,
              "a_" + std::to_string(j) + " must be zero because deg h does not divide " + std::to_string(j));
  }
  require(!this->a(N_).is_zero(), errc::invalid_parameters, "a_N must be nonzero");
}

Poly FamilySpec::assemble_f() const {
  Poly f = pow(h_.poly(), r());
  for (const auto& fi : f_components_) f += fi;
  return f;
}

}  // namespace pblab
