#ifndef PBLAB_LINALG_HPP
#define PBLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "pblab/rational.hpp"

namespace pblab {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

struct LinearSolution {
  QVector particular;             // free variables set to zero
  std::vector<QVector> nullspace; // each vector scaled so its first nonzero entry is 1
};

/// Exact Gaussian elimination over Q for A x = b. Returns nullopt when the
/// system is inconsistent. All rows must share the column count of A and
/// b must match the row count.
std::optional<LinearSolution> linear_solve(const QMatrix& A, const QVector& b);

}  // namespace pblab

#endif
