#ifndef PBLAB_MONOMIAL_HPP
#define PBLAB_MONOMIAL_HPP

#include <optional>
#include <numeric>
#include <vector>

#include "pblab/error.hpp"

namespace pblab {

/// Exponent vector of a power product in n variables.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {
    require(nvars >= 1, errc::invalid_parameters, "monomial needs at least one variable");
  }
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    require(!e_.empty(), errc::invalid_parameters, "monomial needs at least one variable");
    for (int x : e_) require(x >= 0, errc::invalid_parameters, "negative exponent");
  }

  static Monomial variable(int nvars, int var) {
    require(var >= 0 && var < nvars, errc::index_out_of_range, "variable index");
    Monomial m(nvars);
    m.e_[static_cast<size_t>(var)] = 1;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int var) const { return e_[static_cast<size_t>(var)]; }
  const std::vector<int>& exponents() const { return e_; }

  int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    require(nvars() == o.nvars(), errc::nvars_mismatch, "monomial product");
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  /// this / o, or nullopt when some exponent would go negative.
  std::optional<Monomial> divide(const Monomial& o) const {
    require(nvars() == o.nvars(), errc::nvars_mismatch, "monomial quotient");
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) return std::nullopt;
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    require(nvars() == o.nvars(), errc::nvars_mismatch, "monomial divisibility");
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> e_;
};

// Graded lexicographic order with x1 > x2 > ... > xn; the global monomial
// order used for normalization, root extraction and printing.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int i = 0; i < a.nvars(); ++i)
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    return false;
  }
};

}  // namespace pblab

#endif
