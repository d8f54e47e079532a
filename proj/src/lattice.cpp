#include "pblab/lattice.hpp"

#include <algorithm>

#include "pblab/coeff_formulas.hpp"

namespace pblab {

namespace {

void check_problem_shape(int j, int N, int d, int t) {
  require(d >= 2, errc::invalid_parameters, "d must be >= 2");
  require(N >= d, errc::invalid_parameters, "N must be >= d");
  require(j >= 1 && j < N, errc::invalid_parameters, "j must satisfy 1 <= j < N");
  require(t >= 1 && d % t == 0 && N % t == 0, errc::invalid_parameters, "t must divide gcd(d, N)");
}

IndexAlpha unique_corner(int j, int N, int d, int t) {
  // ((d j - s N)/t, 0, ..., 0, N - j)
  int s = d - 1;
  std::vector<int> rest(static_cast<size_t>(s), 0);
  rest.back() = N - j;
  return IndexAlpha((static_cast<long>(d) * j - static_cast<long>(s) * N) / t, std::move(rest));
}

}  // namespace

MinResult brute_force_min(const LatticeProblem& p) {
  check_problem_shape(p.j, p.N, p.d, p.t);
  require(static_cast<int>(p.weight.size()) == p.s() + 1, errc::dimension_mismatch,
          "weight vector must have s+1 entries");

  auto points = enumerate_indices(p.j, p.N, p.d, p.t);
  require(!points.empty(), errc::invalid_parameters, "empty feasible set");

  MinResult out;
  bool first = true;
  for (const auto& alpha : points) {
    Rational v = p.weight[0] * Rational(alpha.alpha0);
    for (int l = 1; l <= p.s(); ++l) v += p.weight[static_cast<size_t>(l)] * Rational(alpha.alpha(l));
    if (first || v < out.value) {
      out.value = v;
      out.argmins.clear();
      first = false;
    }
    if (v == out.value) out.argmins.push_back(alpha);
  }
  std::sort(out.argmins.begin(), out.argmins.end());
  return out;
}

MinResult predicted_min_alpha0(int j, int N, int d) {
  check_problem_shape(j, N, d, 1);
  int s = d - 1;
  MinResult out;
  out.value = Rational(static_cast<long>(d) * j - static_cast<long>(s) * N);
  out.argmins = {unique_corner(j, N, d, 1)};
  return out;
}

MinResult predicted_min_alpha0_k_alphas(int j, int N, int d, int k) {
  check_problem_shape(j, N, d, 1);
  require(k >= 0, errc::invalid_parameters, "k must be >= 0");
  require(d > 2 * k, errc::invalid_parameters, "requires d > 2k");
  int s = d - 1;
  MinResult out;
  out.value = Rational(static_cast<long>(d - k) * j - static_cast<long>(s - k) * N);
  out.argmins = {unique_corner(j, N, d, 1)};
  return out;
}

MinResult predicted_min_t(int j, int N, int d, int t, int k) {
  check_problem_shape(j, N, d, t);
  require(k >= 0, errc::invalid_parameters, "k must be >= 0");
  require(d > 2 * k * t, errc::invalid_parameters, "requires d > 2kt");
  int s = d - 1;
  long dj_sN = static_cast<long>(d) * j - static_cast<long>(s) * N;
  require(dj_sN % t == 0, errc::invariant_violation, "t must divide d*j - s*N");
  MinResult out;
  out.value = Rational(static_cast<long>(d - k * t) * j - static_cast<long>(s - k * t) * N, t);
  out.argmins = {unique_corner(j, N, d, t)};
  return out;
}

MinResult predicted_min_tie(int j, int N, int d1, int t) {
  require(d1 >= 2, errc::invalid_parameters, "d1 must be >= 2");
  int d = 2 * d1;
  check_problem_shape(j, N, d, t);
  require(t >= 1 && d1 % t == 0, errc::invalid_parameters, "t must divide d1");
  require(N % d1 == 0 && (N / d1) % 2 == 1 && N / d1 >= 3, errc::invalid_parameters,
          "N must equal d1*(2k+1) with k >= 1");

  int s = d - 1;
  long r = d / t;
  long rtilde = d1 / t;
  long k = (N / d1 - 1) / 2;

  MinResult out;
  out.value = Rational(rtilde * j - static_cast<long>(d1 - 1) * rtilde * (2 * k + 1));
  for (int l = 0; 2 * l <= N - j; ++l) {
    std::vector<int> rest(static_cast<size_t>(s), 0);
    rest[static_cast<size_t>(s - 2)] = l;
    rest[static_cast<size_t>(s - 1)] = N - j - 2 * l;
    out.argmins.emplace_back(r * j - static_cast<long>(s) * rtilde * (2 * k + 1) + r * l, std::move(rest));
  }
  std::sort(out.argmins.begin(), out.argmins.end());
  return out;
}

SimplexData simplex_data(int j, int N, int d, const std::vector<int>& beta) {
  check_problem_shape(j, N, d, 1);
  int s = d - 1;
  require(static_cast<int>(beta.size()) == s, errc::dimension_mismatch, "beta must have s entries");
  for (int b : beta) require(b >= 0, errc::invalid_parameters, "beta entries must be >= 0");

  SimplexData out;
  out.vertices.emplace_back(static_cast<size_t>(s), Rational(0));
  out.f_at_vertices.push_back(Rational(j));
  for (int l = 1; l <= s; ++l) {
    std::vector<Rational> v(static_cast<size_t>(s), Rational(0));
    v[static_cast<size_t>(l - 1)] = Rational(N - j, d - l);
    out.vertices.push_back(v);
    // f_beta((N-j)/(d-l) e_l) = j - (l - beta_l)/(d - l) * (N - j)
    out.f_at_vertices.push_back(Rational(j) - Rational(l - beta[static_cast<size_t>(l - 1)], d - l) *
                                                  Rational(N - j));
  }

  bool tail_only = true;
  for (int l = 1; l < s; ++l)
    if (beta[static_cast<size_t>(l - 1)] != 0) tail_only = false;
  int beta_s = beta.back();
  if (tail_only && 2 * beta_s <= d) {
    out.has_min_claim = true;
    out.min_value = Rational(j - static_cast<long>(s - beta_s) * (N - j));
    std::vector<Rational> corner(static_cast<size_t>(s), Rational(0));
    corner.back() = Rational(N - j);
    if (2 * beta_s < d) {
      out.min_points = {corner};
    } else {
      out.tie_claim = true;
      std::vector<Rational> other(static_cast<size_t>(s), Rational(0));
      other[static_cast<size_t>(s - 2)] = Rational(N - j, 2);
      out.min_points = {other, corner};
    }
  }
  return out;
}

IndexAlpha phi_map(int j, const std::vector<int>& alphas) {
  long pos = 0;
  for (size_t i = 0; i < alphas.size(); ++i) {
    require(alphas[i] >= 0, errc::invalid_parameters, "simplex point coordinates must be >= 0");
    pos += static_cast<long>(i + 1) * alphas[i];
  }
  return IndexAlpha(j - pos, alphas);
}

IndexAlpha psi_map(const IndexAlpha& alpha, int t) {
  require(t >= 1, errc::invalid_parameters, "t must be >= 1");
  require(alpha.alpha0 % t == 0, errc::invalid_parameters, "alpha_0 must be divisible by t");
  return IndexAlpha(alpha.alpha0 / t, alpha.alphas);
}

std::vector<std::vector<int>> simplex_lattice_points(int j, int N, int d) {
  check_problem_shape(j, N, d, 1);
  std::vector<std::vector<int>> out;
  for (const auto& alpha : enumerate_indices(j, N, d, 1)) out.push_back(alpha.alphas);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pblab
