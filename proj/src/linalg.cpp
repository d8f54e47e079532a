#include "pblab/linalg.hpp"

namespace pblab {

std::optional<LinearSolution> linear_solve(const QMatrix& A, const QVector& b) {
  size_t rows = A.size();
  require(rows == b.size(), errc::dimension_mismatch, "matrix rows vs right-hand side");
  size_t cols = rows == 0 ? 0 : A[0].size();
  for (const auto& row : A)
    require(row.size() == cols, errc::dimension_mismatch, "ragged matrix");

  // Augmented reduction to reduced row echelon form.
  QMatrix m(rows, QVector(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = A[i][j];
    m[i][cols] = b[i];
  }

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    Rational inv = m[rank][col].inverse();
    for (size_t j = col; j <= cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (size_t i = rank; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  LinearSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (size_t r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = m[r][cols];

  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
    // Scale so the first nonzero entry is 1, for a deterministic basis.
    for (auto& x : v)
      if (!x.is_zero()) {
        Rational inv = x.inverse();
        for (auto& y : v) y *= inv;
        break;
      }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace pblab
