#include "pblab/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace pblab {

namespace {

void append_term(std::ostringstream& os, const Monomial& m, const Rational& c, bool first) {
  Rational a = c;
  if (first) {
    if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a.sign() < 0 ? " - " : " + ");
    a = a.abs();
  }
  bool has_vars = !m.is_one();
  bool coeff_is_one = (a == Rational(1));
  if (!has_vars || !coeff_is_one) os << a.str();
  bool need_star = !coeff_is_one;
  for (int v = 0; v < m.nvars(); ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (need_star) os << "*";
    os << "x" << (v + 1);
    if (e > 1) os << "^" << e;
    need_star = true;
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(os, it->first, it->second, first);
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

  Poly run() {
    Poly acc(nvars_);
    skip_ws();
    if (at_end()) err("empty polynomial");
    int sign = read_sign_or(+1);
    acc += parse_term().scaled(Rational(sign));
    skip_ws();
    while (!at_end()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') err("expected '+' or '-'");
      ++pos_;
      acc += parse_term().scaled(Rational(c == '-' ? -1 : 1));
      skip_ws();
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  int read_sign_or(int dflt) {
    skip_ws();
    if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      int sign = s_[pos_] == '-' ? -1 : +1;
      ++pos_;
      return sign;
    }
    return dflt;
  }

  Int parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) err("expected a number");
    return Int(s_.substr(start, pos_ - start));
  }

  Poly parse_factor() {
    skip_ws();
    if (at_end()) err("expected a factor");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_integer();
      skip_ws();
      if (!at_end() && s_[pos_] == '/') {
        ++pos_;
        Int den = parse_integer();
        if (den == 0) err("zero denominator");
        return Poly::constant(nvars_, Rational(num, den));
      }
      return Poly::constant(nvars_, Rational(num));
    }
    if (c == 'x') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) err("expected variable index after 'x'");
      int idx = s_[pos_] - '0';
      ++pos_;
      if (idx < 1 || idx > 9) err("variable index must be 1..9");
      if (idx > nvars_) err("variable x" + std::to_string(idx) + " exceeds ambient count " + std::to_string(nvars_));
      long e = 1;
      skip_ws();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        Int raw = parse_integer();
        if (raw > 512) err("exponent too large");
        e = raw.get_si();
      }
      return pow(Poly::variable(nvars_, idx - 1), e);
    }
    err(std::string("unexpected character '") + c + "'");
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    skip_ws();
    while (!at_end() && s_[pos_] == '*') {
      ++pos_;
      acc *= parse_factor();
      skip_ws();
    }
    return acc;
  }

  const std::string& s_;
  int nvars_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
  require(nvars >= 1 && nvars <= 9, errc::invalid_parameters, "variable count must be 1..9");
  return Parser(text, nvars).run();
}

}  // namespace pblab
