#ifndef PBLAB_HOMOGENEOUS_HPP
#define PBLAB_HOMOGENEOUS_HPP

#include "pblab/poly.hpp"

namespace pblab {

/// A polynomial whose stored monomials all share one total degree, or the
/// zero polynomial carrying a declared degree.
class HomogeneousPoly {
 public:
  explicit HomogeneousPoly(Poly p) : p_(std::move(p)), degree_(0) {
    require(p_.is_homogeneous(), errc::invalid_parameters, "polynomial is not homogeneous");
    if (!p_.is_zero()) degree_ = static_cast<int>(p_.degree().value());
  }
  HomogeneousPoly(Poly p, int degree) : p_(std::move(p)), degree_(degree) {
    require(degree >= 0, errc::invalid_parameters, "homogeneous degree must be >= 0");
    require(p_.is_homogeneous(), errc::invalid_parameters, "polynomial is not homogeneous");
    require(p_.is_zero() || p_.degree() == Degree(degree), errc::invalid_parameters,
            "declared homogeneous degree does not match terms");
  }

  const Poly& poly() const { return p_; }
  int degree() const { return degree_; }
  int nvars() const { return p_.nvars(); }
  bool is_zero() const { return p_.is_zero(); }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.p_ == b.p_ && (a.p_.is_zero() ? a.degree_ == b.degree_ : true);
  }

 private:
  Poly p_;
  int degree_;
};

}  // namespace pblab

#endif
