#ifndef PBLAB_DEGREE_HPP
#define PBLAB_DEGREE_HPP

#include <string>

#include "pblab/error.hpp"

namespace pblab {

/// Total degree with a dedicated minus-infinity value for the zero
/// polynomial. Minus infinity is absorbing under addition and below every
/// finite degree.
class Degree {
 public:
  Degree() : finite_(false), v_(0) {}
  Degree(long v) : finite_(true), v_(v) {}

  static Degree neg_infinity() { return Degree(); }

  bool is_neg_infinity() const { return !finite_; }
  bool is_finite() const { return finite_; }

  long value() const {
    require(finite_, errc::invalid_parameters, "degree is -infinity");
    return v_;
  }

  friend bool operator==(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Degree& a, const Degree& b) { return a < b || a == b; }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator>=(const Degree& a, const Degree& b) { return b <= a; }

  friend Degree operator+(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.v_ + b.v_);
  }
  friend Degree operator+(const Degree& a, long n) {
    return a.finite_ ? Degree(a.v_ + n) : neg_infinity();
  }

  std::string str() const { return finite_ ? std::to_string(v_) : std::string("-inf"); }

 private:
  bool finite_;
  long v_;
};

}  // namespace pblab

#endif
