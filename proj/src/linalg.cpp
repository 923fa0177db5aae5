#include "diagram/linalg.hpp"

#include <utility>

#include "diagram/error.hpp"

namespace diagram::linalg {

namespace {

struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form in place.
Echelon reduce(Matrix m) {
  Echelon out;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

}  // namespace

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, RationalVector(cols, Rational(0))); }

Matrix identity(std::size_t n) {
  Matrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_square(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) return false;
  }
  return true;
}

bool is_symmetric(const Matrix& m) {
  if (!is_square(m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t = zeros(m[0].size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error(Errc::DimensionMismatch, "matrix product shapes disagree");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalVector multiply(const Matrix& a, std::span<const Rational> x) {
  RationalVector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shapes disagree");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> indices) {
  Matrix out = zeros(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out[i][j] = m[indices[i]][indices[j]];
  }
  return out;
}

std::size_t rank(Matrix m) { return reduce(std::move(m)).pivot_cols.size(); }

Rational determinant(Matrix m) {
  if (!is_square(m)) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<RationalVector> solve(Matrix a, RationalVector b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "right-hand side length disagrees");
  const std::size_t ncols = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const Echelon e = reduce(std::move(a));
  RationalVector x(ncols, Rational(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == ncols) return std::nullopt;  // 0 = nonzero row
    x[e.pivot_cols[r]] = e.rows[r][ncols];
  }
  return x;
}

std::vector<RationalVector> nullspace(const Matrix& a) {
  const std::size_t ncols = a.empty() ? 0 : a[0].size();
  const Echelon e = reduce(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace diagram::linalg
