#ifndef PBLAB_FAMILY_HPP
#define PBLAB_FAMILY_HPP

#include <map>
#include <string>
#include <vector>

#include "pblab/homogeneous.hpp"
#include "pblab/poly.hpp"
#include "pblab/rational.hpp"

namespace pblab {

/// Lattice index (alpha_0, alpha_1, ..., alpha_s) with alpha_0 ranging
/// over the integers and the rest over the non-negative integers.
struct IndexAlpha {
  long alpha0 = 0;
  std::vector<int> alphas;  // alpha_1..alpha_s

  IndexAlpha() = default;
  IndexAlpha(long a0, std::vector<int> rest) : alpha0(a0), alphas(std::move(rest)) {}

  int s() const { return static_cast<int>(alphas.size()); }
  int alpha(int l) const {  // l in 1..s
    require(l >= 1 && l <= s(), errc::index_out_of_range, "alpha index");
    return alphas[static_cast<size_t>(l - 1)];
  }
  long sum() const {
    long total = 0;
    for (int a : alphas) total += a;
    return total;
  }
  long weighted_position_sum() const {  // alpha_1 + 2 alpha_2 + ... + s alpha_s
    long total = 0;
    for (size_t i = 0; i < alphas.size(); ++i) total += static_cast<long>(i + 1) * alphas[i];
    return total;
  }
  bool in_natural_range() const {
    for (int a : alphas)
      if (a < 0) return false;
    return true;
  }

  IndexAlpha shifted_alpha0(long delta) const {
    IndexAlpha r = *this;
    r.alpha0 += delta;
    return r;
  }
  IndexAlpha shifted(int l, int delta) const {  // shift alpha_l, l in 1..s
    IndexAlpha r = *this;
    r.alphas[static_cast<size_t>(l - 1)] += delta;
    return r;
  }

  friend bool operator==(const IndexAlpha& a, const IndexAlpha& b) {
    return a.alpha0 == b.alpha0 && a.alphas == b.alphas;
  }
  friend bool operator<(const IndexAlpha& a, const IndexAlpha& b) {  // lexicographic on the tuple
    if (a.alpha0 != b.alpha0) return a.alpha0 < b.alpha0;
    return a.alphas < b.alphas;
  }

  std::string str() const;
};

/// Parameter bundle for one family: degrees d and N with a common
/// homogeneous h of degree t dividing both, the lower components
/// F_1..F_s of F (the top component F_d = h^{d/t} is implied), and the
/// free constants a_j with a_N != 0.
class FamilySpec {
 public:
  FamilySpec(int nvars, int d, int N, int t, HomogeneousPoly h, std::vector<Poly> f_components,
             std::map<int, Rational> a);

  int nvars() const { return nvars_; }
  int d() const { return d_; }
  int N() const { return N_; }
  int t() const { return t_; }
  int s() const { return d_ - 1; }
  int r() const { return d_ / t_; }
  const HomogeneousPoly& h() const { return h_; }

  /// F_i for i in 1..s (zero polynomials allowed).
  const Poly& f_component(int i) const {
    require(i >= 1 && i <= s(), errc::index_out_of_range, "F component index");
    return f_components_[static_cast<size_t>(i - 1)];
  }

  Rational a(int j) const {
    auto it = a_.find(j);
    return it == a_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& a_all() const { return a_; }

  /// F = F_1 + ... + F_s + h^{d/t}.
  Poly assemble_f() const;

 private:
  int nvars_, d_, N_, t_;
  HomogeneousPoly h_;
  std::vector<Poly> f_components_;
  std::map<int, Rational> a_;
};

/// Sparse array of coefficients c^{(j)}_alpha; an absent entry is zero.
class CoefficientTable {
 public:
  using Key = std::pair<int, IndexAlpha>;

  void set(int j, const IndexAlpha& alpha, const Rational& c) {
    if (c.is_zero())
      entries_.erase({j, alpha});
    else
      entries_.insert_or_assign({j, alpha}, c);
  }
  Rational get(int j, const IndexAlpha& alpha) const {
    auto it = entries_.find({j, alpha});
    return it == entries_.end() ? Rational(0) : it->second;
  }
  const std::map<Key, Rational>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, Rational> entries_;
};

}  // namespace pblab

#endif
