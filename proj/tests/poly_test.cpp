#include <doctest.h>

#include "pblab/poly.hpp"
#include "pblab/poly_io.hpp"
#include "pblab/rng.hpp"
#include "pblab/sampling.hpp"

using namespace pblab;

namespace {

Poly P(const std::string& text, int n) { return parse_poly(text, n); }

// Independent product oracle: schoolbook convolution over explicit term
// lists, sidestepping Poly::operator* entirely.
Poly naive_product(const Poly& a, const Poly& b) {
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial prod = ma * mb;
      bool merged = false;
      for (auto& [m, c] : out)
        if (m == prod) {
          c += ca * cb;
          merged = true;
          break;
        }
      if (!merged) out.emplace_back(prod, ca * cb);
    }
  Poly r(a.nvars());
  for (const auto& [m, c] : out) r.add_term(m, c);
  return r;
}

}  // namespace

TEST_CASE("difference of squares") {
  CHECK(P("x1+x2", 2) * P("x1-x2", 2) == P("x1^2-x2^2", 2));
}

TEST_CASE("additive inverse gives the zero polynomial with degree -inf") {
  Poly p = P("2*x1^2*x2 - 7*x3 + 1/3", 3);
  Poly z = p + p.scaled(Rational(-1));
  CHECK(z.is_zero());
  CHECK(z.degree().is_neg_infinity());
}

TEST_CASE("cube of x1+1 against the repeated-multiplication oracle") {
  Poly base = P("x1+1", 1);
  Poly cubed = naive_product(naive_product(base, base), base);
  CHECK(pow(base, 3) == cubed);
  CHECK(cubed == P("x1^3 + 3*x1^2 + 3*x1 + 1", 1));
}

TEST_CASE("partial derivatives") {
  CHECK(P("x1^2*x2", 2).partial_derivative(0) == P("2*x1*x2", 2));
  CHECK(P("x2^3", 2).partial_derivative(0).is_zero());
  // Inner polynomial of the Nagata map: d(x2^2 + x3*x1)/dx3 = x1.
  CHECK(P("x2^2 + x3*x1", 3).partial_derivative(2) == P("x1", 3));
}

TEST_CASE("nagata map components parse and differentiate") {
  Poly inner = P("x2^2 + x3*x1", 3);
  Poly first = P("x1", 3) + P("2*x2", 3) * inner - P("x3", 3) * inner * inner;
  Poly second = P("x2", 3) - P("x3", 3) * inner;
  CHECK(first.degree() == Degree(5));
  CHECK(second.degree() == Degree(3));
  CHECK(first == parse_poly(to_string(first), 3));
  CHECK(second == parse_poly(to_string(second), 3));
}

TEST_CASE("homogeneous components") {
  auto comps = P("x1^2 + x2", 2).homogeneous_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].first == 1);
  CHECK(comps[0].second == P("x2", 2));
  CHECK(comps[1].first == 2);
  CHECK(comps[1].second == P("x1^2", 2));

  CHECK(Poly::zero(2).homogeneous_components().empty());

  auto sq = (P("x1+1", 2) * P("x1+1", 2)).homogeneous_components();
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].second == P("1", 2));
  CHECK(sq[1].second == P("2*x1", 2));
  CHECK(sq[2].second == P("x1^2", 2));
}

TEST_CASE("homogeneous components round-trip and stay sorted") {
  Rng rng(101);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Poly p = random_poly(rng, n, 6, 6);
    Poly sum(n);
    int last = -1;
    for (const auto& [deg, comp] : p.homogeneous_components()) {
      CHECK(deg > last);
      CHECK(!comp.is_zero());
      CHECK(comp.is_homogeneous());
      last = deg;
      sum += comp;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("exact division") {
  CHECK(*exact_divide(P("x1", 2), P("x1^2*x2", 2)) == P("x1*x2", 2));
  CHECK(*exact_divide(P("x1+x2", 2), P("x1^2-x2^2", 2)) == P("x1-x2", 2));
  CHECK(!exact_divide(P("x1*x2", 2), P("x1^2+x2^2", 2)).has_value());
  CHECK_THROWS_AS((void)exact_divide(Poly::zero(2), P("x1", 2)), error);
}

TEST_CASE("exact division round-trips on random factors") {
  Rng rng(77);
  for (int it = 0; it < 50; ++it) {
    int n = static_cast<int>(rng.uniform(2, 3));
    Poly g = random_poly(rng, n, 3, 3);
    Poly q = random_poly(rng, n, 3, 3);
    if (g.is_zero()) continue;
    auto back = exact_divide(g, g * q);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  Rng rng(42);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Poly a = random_poly(rng, n, 5, 4);
    Poly b = random_poly(rng, n, 5, 4);
    Poly c = random_poly(rng, n, 5, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a * b == naive_product(a, b));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("nvars mismatch is rejected") {
  CHECK_THROWS_AS((void)(P("x1", 1) + P("x1", 2)), error);
  CHECK_THROWS_AS((void)P("x1", 1).partial_derivative(1), error);
}

TEST_CASE("evaluation and composition") {
  Poly p = P("x1^2 - 2*x1*x2 + 3", 2);
  CHECK(p.evaluate({Rational(2), Rational(1, 2)}) == Rational(5));
  // p(x, x) collapses the cross term.
  Poly diag = p.compose({P("x1", 1), P("x1", 1)});
  CHECK(diag == P("3 - x1^2", 1));
}
