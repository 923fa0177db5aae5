#include "diagram/lp.hpp"

#include "diagram/error.hpp"

namespace diagram::lp {

Feasibility nonnegative_solution(const Matrix& a, const RationalVector& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error(Errc::DimensionMismatch, "right-hand side length disagrees");
  const std::size_t n = m ? a[0].size() : 0;
  Feasibility out;
  if (m == 0) {
    out.feasible = true;
    out.solution.assign(n, Rational(0));
    return out;
  }

  // Tableau [A' | I | b'] with rows flipped so that b' ≥ 0; artificials start basic.
  const std::size_t cols = n + m;
  std::vector<int> flip(m, 1);
  Matrix t(m, RationalVector(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(Errc::DimensionMismatch, "ragged constraint matrix");
    flip[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip[i] * a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = flip[i] * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  auto cost = [n](std::size_t j) { return j >= n ? 1 : 0; };

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols && entering == cols; ++j) {
      Rational reduced = cost(j);
      for (std::size_t i = 0; i < m; ++i) {
        if (cost(basis[i]) != 0) reduced -= t[i][j];
      }
      if (reduced < 0) entering = j;
    }
    if (entering == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][entering] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][entering];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    const Rational p = t[leave][entering];
    for (auto& x : t[leave]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][entering] == 0) continue;
      const Rational f = t[i][entering];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = entering;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (cost(basis[i]) != 0) objective += t[i][cols];
  }
  if (objective == 0) {
    out.feasible = true;
    out.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) out.solution[basis[i]] = t[i][cols];
    }
    return out;
  }
  // Phase-one dual y = c_Bᵀ B⁻¹, with B⁻¹ sitting in the artificial columns.
  // It satisfies yᵀA' ≤ 0 and yᵀb' > 0, so z = -flip·y separates b from cone(A).
  out.certificate.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational y = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (cost(basis[i]) != 0) y += t[i][n + k];
    }
    out.certificate[k] = -flip[k] * y;
  }
  return out;
}

}  // namespace diagram::lp
