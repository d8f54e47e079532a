#include "pblab/coeff_formulas.hpp"

#include <algorithm>
#include <set>

namespace pblab {

namespace {

bool in_index_set(const IndexAlpha& alpha, int j, int N, int d, int t) {
  if (!alpha.in_natural_range()) return false;
  if (alpha.s() != d - 1) return false;
  long pos = alpha.weighted_position_sum();
  if (static_cast<long>(t) * alpha.alpha0 + pos != j) return false;
  return static_cast<long>(t) * alpha.alpha0 + static_cast<long>(d) * alpha.sum() <= N;
}

void enumerate_rec(int j, int N, int d, int t, int l, long budget, std::vector<int>& partial,
                   std::vector<IndexAlpha>& out) {
  int s = d - 1;
  if (l > s) {
    long pos = 0;
    for (size_t i = 0; i < partial.size(); ++i) pos += static_cast<long>(i + 1) * partial[i];
    if ((j - pos) % t != 0) return;
    out.emplace_back((j - pos) / t, partial);
    return;
  }
  // Remaining budget tracks sum (d-l') alpha_l' <= N-j, which keeps the
  // enumeration finite: each coordinate costs at least 1.
  int cost = d - l;
  for (int v = 0; static_cast<long>(v) * cost <= budget; ++v) {
    partial.push_back(v);
    enumerate_rec(j, N, d, t, l + 1, budget - static_cast<long>(v) * cost, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<IndexAlpha> enumerate_indices(int j, int N, int d, int t) {
  require(d >= 2, errc::invalid_parameters, "d must be >= 2");
  require(t >= 1 && d % t == 0 && N % t == 0, errc::invalid_parameters, "t must divide gcd(d, N)");
  require(j >= 1 && j <= N, errc::invalid_parameters, "j must satisfy 1 <= j <= N");

  std::vector<IndexAlpha> out;
  std::vector<int> partial;
  enumerate_rec(j, N, d, t, 1, static_cast<long>(N) - j, partial, out);
  std::sort(out.begin(), out.end());
  return out;
}

Rational coeff_c_value(const IndexAlpha& alpha, int d, int t, int N, const std::map<int, Rational>& a) {
  int r = d / t;
  long A = alpha.sum();
  long subscript = static_cast<long>(t) * alpha.alpha0 + static_cast<long>(d) * A;
  Rational aj(0);
  if (auto it = a.find(static_cast<int>(subscript)); it != a.end() && subscript >= 1 && subscript <= N)
    aj = it->second;
  if (aj.is_zero()) return Rational(0);

  Int num(1);
  for (long k = 1; k <= A; ++k) num *= Int(alpha.alpha0 + static_cast<long>(r) * k);
  if (num == 0) return Rational(0);
  Int den(1);
  for (int al : alpha.alphas)
    for (int i = 1; i <= al; ++i) den *= Int(static_cast<long>(r) * i);
  return Rational(num, den) * aj;
}

Rational coeff_c(int j, const IndexAlpha& alpha, const FamilySpec& spec) {
  require(in_index_set(alpha, j, spec.N(), spec.d(), spec.t()), errc::invalid_parameters,
          "alpha " + alpha.str() + " is not in the index set for j=" + std::to_string(j));
  return coeff_c_value(alpha, spec.d(), spec.t(), spec.N(), spec.a_all());
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(Poly base) : base_(std::move(base)) { powers_.push_back(Poly::one(base_.nvars())); }
  const Poly& get(long e) {
    require(e >= 0, errc::invalid_parameters, "negative cached power");
    while (static_cast<long>(powers_.size()) <= e) powers_.push_back(powers_.back() * base_);
    return powers_[static_cast<size_t>(e)];
  }

 private:
  Poly base_;
  std::vector<Poly> powers_;
};

Poly build_component_cached(const FamilySpec& spec, int j, CoefficientTable* table,
                            std::vector<PowerCache>& f_pows, PowerCache& h_pows) {
  require(j >= 1 && j <= spec.N(), errc::invalid_parameters, "component degree j out of range");
  auto indices = enumerate_indices(j, spec.N(), spec.d(), spec.t());

  std::vector<std::pair<IndexAlpha, Rational>> contributing;
  long min_alpha0 = 0;
  for (const auto& alpha : indices) {
    Rational c = coeff_c_value(alpha, spec.d(), spec.t(), spec.N(), spec.a_all());
    if (c.is_zero()) continue;
    if (table) table->set(j, alpha, c);
    min_alpha0 = std::min(min_alpha0, alpha.alpha0);
    contributing.emplace_back(alpha, c);
  }

  long m = -min_alpha0;  // clear denominators: work over a common h^m
  Poly acc(spec.nvars());
  for (const auto& [alpha, c] : contributing) {
    Poly term = Poly::constant(spec.nvars(), c);
    for (int l = 1; l <= spec.s(); ++l)
      if (alpha.alpha(l) > 0) term *= f_pows[static_cast<size_t>(l - 1)].get(alpha.alpha(l));
    term *= h_pows.get(alpha.alpha0 + m);
    acc += term;
  }
  if (m == 0) return acc;

  auto q = exact_divide(h_pows.get(m), acc);
  if (!q)
    fail(errc::non_divisible,
         "assembled numerator of G_" + std::to_string(j) + " is not divisible by h^" + std::to_string(m) +
             "; the family violates the construction's divisibility hypotheses");
  return *q;
}

}  // namespace

Poly build_component(const FamilySpec& spec, int j, CoefficientTable* table) {
  std::vector<PowerCache> f_pows;
  for (int l = 1; l <= spec.s(); ++l) f_pows.emplace_back(spec.f_component(l));
  PowerCache h_pows(spec.h().poly());
  return build_component_cached(spec, j, table, f_pows, h_pows);
}

Poly build_g(const FamilySpec& spec, int i, const std::vector<Poly>* lower, CoefficientTable* table) {
  require(i >= 1 && i <= spec.N(), errc::invalid_parameters, "threshold i must satisfy 1 <= i <= N");

  Poly g(spec.nvars());
  if (lower) {
    require(static_cast<int>(lower->size()) <= i - 1, errc::invalid_parameters,
            "lower components extend to degree i-1 at most");
    for (size_t idx = 0; idx < lower->size(); ++idx) {
      const Poly& gj = (*lower)[idx];
      if (gj.is_zero()) continue;
      require(gj.nvars() == spec.nvars(), errc::nvars_mismatch, "lower component variable count");
      require(gj.is_homogeneous() && gj.degree() == Degree(static_cast<long>(idx) + 1),
              errc::invalid_parameters, "lower component G_" + std::to_string(idx + 1) + " has wrong degree");
      g += gj;
    }
  }

  std::vector<PowerCache> f_pows;
  for (int l = 1; l <= spec.s(); ++l) f_pows.emplace_back(spec.f_component(l));
  PowerCache h_pows(spec.h().poly());
  for (int j = i; j <= spec.N(); ++j) g += build_component_cached(spec, j, table, f_pows, h_pows);
  return g;
}

namespace {

struct TableView {
  const CoefficientTable& table;
  Rational at(int u, const IndexAlpha& alpha) const {
    if (!alpha.in_natural_range()) return Rational(0);
    return table.get(u, alpha);
  }
};

}  // namespace

ConditionReport check_conditions(const CoefficientTable& table, int i, int s, int r) {
  require(s >= 1 && r >= 1, errc::invalid_parameters, "condition check needs s >= 1 and r >= 1");
  ConditionReport report;
  if (table.empty()) return report;

  std::map<int, std::set<IndexAlpha>> support;
  int max_j = i;
  for (const auto& [key, c] : table.entries()) {
    support[key.first].insert(key.second);
    max_j = std::max(max_j, key.first);
  }

  TableView view{table};
  auto note_failure = [&](bool& flag, const char* name, int w, const IndexAlpha& alpha, int k, int l,
                          const Rational& lhs, const Rational& rhs) {
    flag = false;
    if (!report.first_failure)
      report.first_failure = ConditionWitness{name, w, alpha, k, l, lhs, rhs};
  };

  // Candidate alphas per window: the support of the degrees the identity
  // touches, extended by one shift in every direction (e_0 shifts move
  // alpha_0 by r).
  auto universe = [&](int u_lo, int u_hi) {
    std::set<IndexAlpha> out;
    auto add_with_shifts = [&](const IndexAlpha& beta) {
      out.insert(beta);
      out.insert(beta.shifted_alpha0(r));
      out.insert(beta.shifted_alpha0(-r));
      for (int l = 1; l <= s; ++l) {
        out.insert(beta.shifted(l, 1));
        if (beta.alpha(l) > 0) out.insert(beta.shifted(l, -1));
      }
    };
    for (int u = u_lo; u <= u_hi; ++u) {
      auto it = support.find(u);
      if (it == support.end()) continue;
      for (const auto& beta : it->second) add_with_shifts(beta);
    }
    return out;
  };

  for (int w = i; w <= max_j; ++w) {
    auto alphas_c1 = universe(w, w + s - 1);
    for (const auto& alpha : alphas_c1) {
      if (!alpha.in_natural_range()) continue;
      for (int k = 1; k <= s; ++k)
        for (int l = k + 1; l <= s; ++l) {
          Rational lhs = Rational(alpha.alpha(k) + 1) * view.at(w + s - l, alpha.shifted(k, 1));
          Rational rhs = Rational(alpha.alpha(l) + 1) * view.at(w + s - k, alpha.shifted(l, 1));
          if (lhs != rhs) note_failure(report.c1, "c1", w, alpha, k, l, lhs, rhs);
        }
    }

    auto alphas_c2 = universe(w, w + 2 * s - 1);
    for (const auto& alpha : alphas_c2) {
      if (!alpha.in_natural_range()) continue;
      for (int k = 1; k <= s; ++k) {
        if (alpha.alpha(k) == 0) continue;
        Rational factor = Rational(alpha.alpha0) / Rational(static_cast<long>(r) * alpha.alpha(k));
        for (int l = 1; l <= s; ++l) {
          Rational lhs = view.at(w + l - 1, alpha.shifted_alpha0(-r));
          Rational rhs = factor * view.at(w + l + s - k, alpha.shifted(k, -1));
          if (lhs != rhs) note_failure(report.c2, "c2", w, alpha, k, l, lhs, rhs);
        }
      }
    }
  }

  for (int w = i + 1; w <= max_j + 1; ++w) {
    auto alphas_p1 = universe(w - 1, w + s - 1);
    for (const auto& alpha : alphas_p1) {
      if (!alpha.in_natural_range()) continue;
      for (int l = 1; l <= s; ++l) {
        if (alpha.alpha(l) == 0) continue;
        Rational lhs = view.at(w - 1, alpha.shifted_alpha0(-r));
        Rational rhs = Rational(alpha.alpha0) / Rational(static_cast<long>(r) * alpha.alpha(l)) *
                       view.at(w + s - l, alpha.shifted(l, -1));
        if (lhs != rhs) note_failure(report.p1, "p1", w, alpha, l, l, lhs, rhs);
      }
    }
  }

  return report;
}

}  // namespace pblab
