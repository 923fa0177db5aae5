#include "diagram/lattice.hpp"

#include <utility>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"

namespace diagram {

BilinearLattice::BilinearLattice(Matrix gram) : gram_(std::move(gram)) {
  if (!linalg::is_square(gram_)) throw Error(Errc::NotSquare, "gram matrix must be square");
  if (!linalg::is_symmetric(gram_)) throw Error(Errc::NotSymmetric, "gram matrix must be symmetric");
}

Rational BilinearLattice::form(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != rank() || v.size() != rank()) {
    throw Error(Errc::DimensionMismatch, "vector length differs from lattice rank");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (v[j] != 0 && gram_[i][j] != 0) row += gram_[i][j] * v[j];
    }
    sum += u[i] * row;
  }
  return sum;
}

LatticePtr make_lattice(Matrix gram) { return std::make_shared<const BilinearLattice>(std::move(gram)); }

LatticePtr diagonal_lattice(const RationalVector& diagonal) {
  Matrix g = linalg::zeros(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) g[i][i] = diagonal[i];
  return make_lattice(std::move(g));
}

LatticePtr standard_hyperbolic_lattice(std::size_t rank) {
  RationalVector d(rank, Rational(-1));
  if (rank > 0) d[0] = 1;
  return diagonal_lattice(d);
}

LatticeVector::LatticeVector(LatticePtr lattice, RationalVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw Error(Errc::MismatchedLattice, "vector without a lattice");
  if (coords_.size() != lattice_->rank()) {
    throw Error(Errc::DimensionMismatch, "coordinate count " + std::to_string(coords_.size()) +
                                             " differs from lattice rank " + std::to_string(lattice_->rank()));
  }
}

LatticeVector LatticeVector::basis(const LatticePtr& lattice, std::size_t i) {
  RationalVector c(lattice->rank(), Rational(0));
  c.at(i) = 1;
  return LatticeVector(lattice, std::move(c));
}

LatticeVector LatticeVector::zero(const LatticePtr& lattice) {
  return LatticeVector(lattice, RationalVector(lattice->rank(), Rational(0)));
}

Rational LatticeVector::square() const { return lattice_->form(coords_, coords_); }

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (!same_lattice(lattice_, other.lattice_)) throw Error(Errc::MismatchedLattice, "sum across lattices");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (!same_lattice(lattice_, other.lattice_)) throw Error(Errc::MismatchedLattice, "difference across lattices");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return same_lattice(a.lattice_, b.lattice_) && a.coords_ == b.coords_;
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

Rational inner(const LatticeVector& u, const LatticeVector& v) {
  if (!same_lattice(u.lattice(), v.lattice())) {
    throw Error(Errc::MismatchedLattice, "inner product of vectors on different lattices");
  }
  return u.lattice()->form(u.coords(), v.coords());
}

bool positively_proportional(const LatticeVector& u, const LatticeVector& v) {
  if (u.rank() != v.rank() || u.is_zero() || v.is_zero()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < u.rank(); ++i) {
    const auto& a = u.coords()[i];
    const auto& b = v.coords()[i];
    if ((a == 0) != (b == 0)) return false;
    if (a == 0) continue;
    Rational r = b / a;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && *ratio > 0;
}

Matrix gram_matrix(std::span<const LatticeVector> vectors) {
  Matrix g = linalg::zeros(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g[i][j] = inner(vectors[i], vectors[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

std::string_view to_string(DefinitenessClass c) {
  switch (c) {
    case DefinitenessClass::NegativeDefinite: return "NegativeDefinite";
    case DefinitenessClass::NegativeSemiDefinite: return "NegativeSemiDefinite";
    case DefinitenessClass::HyperbolicSign: return "HyperbolicSign";
    case DefinitenessClass::Other: return "Other";
  }
  return "Other";
}

InertiaSignature signature(const Matrix& g) {
  if (!linalg::is_symmetric(g)) throw Error(Errc::NotSymmetric, "signature needs a symmetric matrix");
  Matrix a = g;
  const std::size_t n = a.size();
  InertiaSignature sig;

  auto swap_index = [&a, n](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal on the trailing block: look for an off-diagonal entry and
      // replace basis vector u by u + v, which makes the diagonal 2·a[u][v].
      std::size_t u = n, v = n;
      for (std::size_t i = k; i < n && u == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            u = i;
            v = j;
            break;
          }
        }
      }
      if (u == n) {
        sig.zero += n - k;
        return sig;
      }
      for (std::size_t c = 0; c < n; ++c) a[u][c] += a[v][c];
      for (std::size_t r = 0; r < n; ++r) a[r][u] += a[r][v];
      pivot = u;
    }
    swap_index(k, pivot);
    const Rational p = a[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
    }
    if (p > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

DefinitenessClass definiteness_class(const InertiaSignature& s) {
  if (s.positive == 1) return DefinitenessClass::HyperbolicSign;
  if (s.positive > 1) return DefinitenessClass::Other;
  return s.zero == 0 ? DefinitenessClass::NegativeDefinite : DefinitenessClass::NegativeSemiDefinite;
}

DefinitenessClass definiteness_class(const Matrix& g) { return definiteness_class(signature(g)); }

bool is_hyperbolic(const BilinearLattice& lattice) {
  const auto s = signature(lattice.gram());
  return s.positive == 1 && s.zero == 0 && s.negative + 1 == lattice.rank();
}

LatticeVector reflection(const LatticeVector& delta, const LatticeVector& x) {
  const Rational d2 = delta.square();
  if (d2 == 0) throw Error(Errc::IsotropicMirror, "reflection in an isotropic vector");
  const Rational f = 2 * inner(x, delta) / d2;
  return x - f * delta;
}

}  // namespace diagram
