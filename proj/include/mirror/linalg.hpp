#pragma once

#include <optional>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(size_t n);
Matrix zero_matrix(size_t rows, size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& m);
size_t rank(Matrix m);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of the right null space {x : m x = 0}.
std::vector<std::vector<Rational>> null_space(const Matrix& m, size_t cols);

}  // namespace mirror
