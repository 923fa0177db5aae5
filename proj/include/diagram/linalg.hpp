#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "diagram/rational.hpp"

// Dense exact linear algebra over Q. Matrices are row-major vectors of rows.
namespace diagram::linalg {

Matrix zeros(std::size_t rows, std::size_t cols);
Matrix identity(std::size_t n);

bool is_square(const Matrix& m);
bool is_symmetric(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
RationalVector multiply(const Matrix& a, std::span<const Rational> x);

/// Principal submatrix on the given (sorted or unsorted) index list.
Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> indices);

std::size_t rank(Matrix m);
Rational determinant(Matrix m);

/// Some solution of a·x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RationalVector> solve(Matrix a, RationalVector b);

/// Basis of {x : a·x = 0}.
std::vector<RationalVector> nullspace(const Matrix& a);

}  // namespace diagram::linalg
