#include "mirror/linalg.hpp"

namespace mirror {

Matrix identity_matrix(size_t n) {
  Matrix m = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix zero_matrix(size_t rows, size_t cols) { return Matrix(rows, std::vector<Rational>(cols, Rational(0))); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const size_t inner = b.size();
  const size_t cols = b.empty() ? 0 : b.front().size();
  if (a.front().size() != inner) throw precondition_error("matrix shapes do not match");
  Matrix out = zero_matrix(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b.at(i).at(j);
  return out;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> row_reduce(Matrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  const size_t n = m.size();
  Matrix aug = zero_matrix(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw precondition_error("inverse of a non-square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  Matrix out = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::vector<std::vector<Rational>> null_space(const Matrix& m, size_t cols) {
  Matrix r = m;
  for (auto& row : r) row.resize(cols, Rational(0));
  const auto pivots = row_reduce(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mirror
