#include <doctest.h>

#include "pblab/h_reduction.hpp"
#include "pblab/poly_io.hpp"
#include "pblab/rng.hpp"
#include "pblab/sampling.hpp"

using namespace pblab;

namespace {
Poly P(const std::string& text, int n) { return parse_poly(text, n); }
HomogeneousPoly H(const std::string& text, int n) { return HomogeneousPoly(parse_poly(text, n)); }
}

TEST_CASE("reduction of scalar power multiples") {
  auto r1 = h_reduce(H("x1", 2), H("5*x1^3", 2));
  CHECK(r1.scale == Rational(5));
  CHECK(r1.exponent == 3);

  auto r2 = h_reduce(H("x1*x2", 2), HomogeneousPoly(pow(P("x1*x2", 2), 2).scaled(Rational(9)), 4));
  CHECK(r2.scale == Rational(9));
  CHECK(r2.exponent == 2);

  auto rz = h_reduce(H("x1*x2", 2), HomogeneousPoly(Poly::zero(2), 3));
  CHECK(rz.scale == Rational(0));
  CHECK(rz.exponent == 0);
}

TEST_CASE("non-commuting input is rejected by direct bracket computation") {
  CHECK_THROWS_AS((void)h_reduce(H("x1*x2", 2), H("x1^3", 2)), error);
  try {
    (void)h_reduce(H("x1*x2", 2), H("x1^3", 2));
  } catch (const error& e) {
    CHECK(e.code() == errc::not_commuting);
  }
}

TEST_CASE("proper-power H is rejected") {
  try {
    (void)h_reduce(H("x1^2*x2^2", 2), H("x1*x2", 2));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::h_is_proper_power);
  }
}

TEST_CASE("degree mismatch with a commuting nonzero P certifies a violated hypothesis") {
  // 2*x1^2 passes the rational proper-power filter yet is a square over
  // an extension; the one-variable dependence makes x1^3 commute with it.
  try {
    (void)h_reduce(H("2*x1^2", 2), H("x1^3", 2));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent);
  }
}

TEST_CASE("expansion in powers of H") {
  Poly h = P("x1+x2", 2);
  Poly p = h * h + h.scaled(Rational(3)) + Poly::one(2);
  CHECK(express_in_h(HomogeneousPoly(h), p) ==
        std::vector<Rational>{Rational(1), Rational(3), Rational(1)});

  CHECK(express_in_h(H("x1", 2), Poly::zero(2)).empty());

  Poly q = P("x1*x2", 2);
  Poly combo = pow(q, 3).scaled(Rational(2)) - q;
  CHECK(express_in_h(HomogeneousPoly(q), combo) ==
        std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(2)});
}

TEST_CASE("expansion rejects components at non-multiple degrees") {
  try {
    (void)express_in_h(H("x1*x2", 2), P("x1*x2 + x1*x2*x1", 2));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent);
  }
}

TEST_CASE("round-trips on random bases and coefficient tuples") {
  Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(rng.uniform(2, 3));
    HomogeneousPoly h = random_base_form(rng, n, static_cast<int>(rng.uniform(1, 3)));

    Rational a = rng.rational(9, 4, true);
    int k = static_cast<int>(rng.uniform(0, 6));
    auto red = h_reduce(h, HomogeneousPoly(pow(h.poly(), k).scaled(a), k * h.degree()));
    CHECK(red.scale == a);
    CHECK(red.exponent == k);
    CHECK(pow(h.poly(), red.exponent).scaled(red.scale) == pow(h.poly(), k).scaled(a));
    // Divisibility clause: nonzero outputs have deg P = k deg H.
    CHECK(k * h.degree() == red.exponent * h.degree());

    std::vector<Rational> coeffs;
    int top = static_cast<int>(rng.uniform(0, 4));
    for (int l = 0; l < top; ++l) coeffs.push_back(rng.rational(9, 4, false));
    coeffs.push_back(rng.rational(9, 4, true));
    Poly sum(n);
    for (size_t l = 0; l < coeffs.size(); ++l)
      sum += pow(h.poly(), static_cast<long>(l)).scaled(coeffs[l]);
    CHECK(express_in_h(h, sum) == coeffs);
  }
}
