#pragma once

// Reference implementations used only by the tests. They deliberately avoid the
// library's own algorithms: signatures come from the characteristic polynomial,
// distances from brute-force path enumeration, Zariski decompositions from trying
// every support subset.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "diagram/error.hpp"
#include "diagram/gram.hpp"
#include "diagram/lattice.hpp"
#include "diagram/surface.hpp"

namespace oracle {

using diagram::Matrix;
using diagram::Rational;
using diagram::RationalVector;

// Coefficients c[0..n] of det(xI - A), via Faddeev-LeVerrier.
inline RationalVector char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  RationalVector c(n + 1);
  c[n] = 1;
  Matrix m(n, RationalVector(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

inline std::size_t sign_changes(const RationalVector& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Symmetric matrices have only real eigenvalues, so Descartes' count is exact.
inline diagram::InertiaSignature signature(const Matrix& a) {
  RationalVector c = char_poly(a);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero] == 0) ++zero;
  RationalVector reduced(c.begin() + static_cast<long>(zero), c.end());
  RationalVector mirrored = reduced;
  for (std::size_t i = 0; i < mirrored.size(); ++i) {
    if ((i + zero) % 2 == 1) mirrored[i] = -mirrored[i];
  }
  return {sign_changes(reduced), sign_changes(mirrored), zero};
}

inline Matrix sub(const Matrix& g, const std::vector<std::size_t>& s) {
  Matrix out(s.size(), RationalVector(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) out[i][j] = g[s[i]][s[j]];
  }
  return out;
}

inline bool connected(const Matrix& g) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v && g[v][w] != 0 && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline std::vector<std::size_t> from_mask(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

inline bool hyperbolic(const Matrix& g, std::uint32_t mask) { return signature(sub(g, from_mask(mask))).positive == 1; }

// Class of a subset of a family Gram matrix, from scratch.
inline diagram::SubsetClass classify(const Matrix& g, std::uint32_t mask) {
  using K = diagram::SubsetClass::Kind;
  const auto s = from_mask(mask);
  const Matrix m = sub(g, s);
  const auto sig = signature(m);
  if (sig.positive == 1) {
    bool minimal = true;
    for (std::uint32_t proper = (mask - 1) & mask; proper != 0; proper = (proper - 1) & mask) {
      if (hyperbolic(g, proper)) {
        minimal = false;
        break;
      }
    }
    return {K::Hyperbolic, minimal};
  }
  if (sig.positive == 0 && sig.zero == 0) return {K::Elliptic, false};
  if (sig.positive == 0 && connected(m)) return {K::ConnectedParabolic, false};
  return {K::NonHyperbolicMixed, false};
}

// Minimum over all simple u-v paths of (edges - vertices in Q).
inline diagram::Distance rho_q(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& in_q, std::size_t u,
                               std::size_t v) {
  const std::size_t n = adj.size();
  std::optional<long> best;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, long, long)> walk = [&](std::size_t x, long edges, long hits) {
    if (x == v) {
      const long cost = edges - hits;
      if (!best || cost < *best) best = cost;
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (adj[x][y] && !on_path[y]) {
        on_path[y] = true;
        walk(y, edges + 1, hits + (in_q[y] ? 1 : 0));
        on_path[y] = false;
      }
    }
  };
  on_path[u] = true;
  walk(u, 0, 0);
  if (!best) return std::nullopt;
  return static_cast<std::size_t>(*best);
}

// Laplace expansion; fine for the tiny matrices used here.
inline Rational det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      RationalVector row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    const Rational term = a[0][j] * det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

struct ZariskiCandidate {
  std::vector<std::size_t> support;
  RationalVector alphas;
  RationalVector p;
};

// Every support subset yielding a valid decomposition (i)-(iii).
inline std::vector<ZariskiCandidate> zariski_all(const diagram::SurfaceModel& model, const diagram::LatticeVector& d) {
  const std::size_t m = model.curves.size();
  std::vector<ZariskiCandidate> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const auto s = from_mask(mask);
    std::vector<diagram::LatticeVector> f;
    for (auto i : s) f.push_back(model.curves[i].second);
    Matrix g(s.size(), RationalVector(s.size()));
    RationalVector rhs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) g[i][j] = diagram::inner(f[i], f[j]);
      rhs[i] = diagram::inner(d, f[i]);
    }
    if (!s.empty()) {
      const auto sig = signature(g);
      if (sig.negative != s.size()) continue;
    }
    // Cramer's rule keeps this independent of the library's elimination.
    RationalVector alpha(s.size());
    if (!s.empty()) {
      const Rational base = det(g);
      for (std::size_t i = 0; i < s.size(); ++i) {
        Matrix gi = g;
        for (std::size_t r = 0; r < s.size(); ++r) gi[r][i] = rhs[r];
        alpha[i] = det(gi) / base;
      }
    }
    bool ok = std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > 0; });
    if (!ok) continue;
    diagram::LatticeVector p = d;
    for (std::size_t i = 0; i < s.size(); ++i) p -= alpha[i] * f[i];
    for (const auto& [label, c] : model.curves) {
      if (diagram::inner(p, c) < 0) ok = false;
    }
    if (ok) out.push_back({s, alpha, p.coords()});
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 1) {
  std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng)) / den(rng);
}

}  // namespace oracle
