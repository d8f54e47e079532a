#include "pblab/rational.hpp"

#include <ostream>

namespace pblab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::nvars_mismatch: return "nvars_mismatch";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::zero_divisor: return "zero_divisor";
    case errc::constant_input: return "constant_input";
    case errc::not_commuting: return "not_commuting";
    case errc::h_is_proper_power: return "h_is_proper_power";
    case errc::inconsistent: return "inconsistent";
    case errc::non_divisible: return "non_divisible";
    case errc::not_applicable: return "not_applicable";
    case errc::invalid_parameters: return "invalid_parameters";
    case errc::parse_error: return "parse_error";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::resource_limit: return "resource_limit";
    case errc::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

std::optional<Rational> Rational::parse(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rational(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  return Rational(Int(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, long e) {
  if (e < 0) return pow(r.inverse(), -e);
  Rational acc(1), base(r);
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

namespace {

std::optional<Int> exact_int_root(const Int& v, unsigned long m) {
  if (v == 0) return Int(0);
  if (v < 0) {
    if (m % 2 == 0) return std::nullopt;
    auto r = exact_int_root(-v, m);
    if (!r) return std::nullopt;
    return -*r;
  }
  Int root;
  int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), m);
  if (!exact) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> nth_root(const Rational& r, unsigned long m) {
  require(m >= 1, errc::invalid_parameters, "root order must be >= 1");
  if (m == 1) return r;
  auto n = exact_int_root(r.numerator(), m);
  if (!n) return std::nullopt;
  auto d = exact_int_root(r.denominator(), m);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace pblab
