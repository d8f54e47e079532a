#include <doctest.h>

#include "pblab/linalg.hpp"
#include "pblab/rng.hpp"

using namespace pblab;

TEST_CASE("identity system returns b with empty nullspace") {
  QMatrix A = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  QVector b = {Rational(3), Rational(-7)};
  auto sol = linear_solve(A, b);
  REQUIRE(sol.has_value());
  CHECK(sol->particular == b);
  CHECK(sol->nullspace.empty());
}

TEST_CASE("zero matrix with nonzero rhs is inconsistent") {
  QMatrix A = {{Rational(0), Rational(0)}};
  CHECK(!linear_solve(A, {Rational(1)}).has_value());
  auto sol = linear_solve(A, {Rational(0)});
  REQUIRE(sol.has_value());
  CHECK(sol->nullspace.size() == 2);
}

TEST_CASE("underdetermined system x + y = 1") {
  QMatrix A = {{Rational(1), Rational(1)}};
  auto sol = linear_solve(A, {Rational(1)});
  REQUIRE(sol.has_value());
  // Hand elimination: pivot on x, free y set to zero.
  CHECK(sol->particular == QVector{Rational(1), Rational(0)});
  REQUIRE(sol->nullspace.size() == 1);
  CHECK(sol->nullspace[0] == QVector{Rational(1), Rational(-1)});
}

TEST_CASE("random consistent systems solve exactly and nullspace annihilates") {
  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    size_t rows = static_cast<size_t>(rng.uniform(1, 6));
    size_t cols = static_cast<size_t>(rng.uniform(1, 6));
    QMatrix A(rows, QVector(cols));
    QVector x0(cols);
    for (auto& row : A)
      for (auto& v : row) v = rng.rational(6, 3, false);
    for (auto& v : x0) v = rng.rational(6, 3, false);
    QVector b(rows, Rational(0));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) b[r] += A[r][c] * x0[c];

    auto sol = linear_solve(A, b);
    REQUIRE(sol.has_value());
    for (size_t r = 0; r < rows; ++r) {
      Rational acc(0);
      for (size_t c = 0; c < cols; ++c) acc += A[r][c] * sol->particular[c];
      CHECK(acc == b[r]);
    }
    for (const auto& v : sol->nullspace)
      for (size_t r = 0; r < rows; ++r) {
        Rational acc(0);
        for (size_t c = 0; c < cols; ++c) acc += A[r][c] * v[c];
        CHECK(acc == Rational(0));
      }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS((void)linear_solve({{Rational(1)}}, {Rational(1), Rational(2)}), error);
  CHECK_THROWS_AS((void)linear_solve({{Rational(1)}, {Rational(1), Rational(2)}}, {Rational(1), Rational(2)}),
                  error);
}
