#ifndef PBLAB_RATIONAL_HPP
#define PBLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "pblab/error.hpp"

namespace pblab {

using Int = mpz_class;

/// Exact rational number. Always stored reduced with positive denominator;
/// the canonical zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) {
    require(den != 0, errc::zero_divisor, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Accepts "p" or "p/q" with optional leading '-'.
  static std::optional<Rational> parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), errc::zero_divisor, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational inverse() const {
    require(!is_zero(), errc::zero_divisor, "inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r^e for e >= 0, or exact inverse powers for e < 0 (error on 0^negative).
Rational pow(const Rational& r, long e);

/// Exact rational m-th root, m >= 1; nullopt when no such rational exists.
std::optional<Rational> nth_root(const Rational& r, unsigned long m);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

}  // namespace pblab

#endif
