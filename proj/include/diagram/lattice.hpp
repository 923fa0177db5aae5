#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "diagram/rational.hpp"

namespace diagram {

/// Exact symmetric bilinear form of finite rank, immutable once built.
class BilinearLattice {
 public:
  /// Throws NotSquare / NotSymmetric.
  explicit BilinearLattice(Matrix gram);

  std::size_t rank() const noexcept { return gram_.size(); }
  const Matrix& gram() const noexcept { return gram_; }

  Rational form(std::span<const Rational> u, std::span<const Rational> v) const;

  friend bool operator==(const BilinearLattice& a, const BilinearLattice& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

using LatticePtr = std::shared_ptr<const BilinearLattice>;

LatticePtr make_lattice(Matrix gram);
LatticePtr diagonal_lattice(const RationalVector& diagonal);

/// diag(1, -1, ..., -1) of the given rank.
LatticePtr standard_hyperbolic_lattice(std::size_t rank);

/// Element of a lattice; value semantics, shares the (immutable) lattice.
class LatticeVector {
 public:
  LatticeVector(LatticePtr lattice, RationalVector coords);

  static LatticeVector basis(const LatticePtr& lattice, std::size_t i);
  static LatticeVector zero(const LatticePtr& lattice);

  const RationalVector& coords() const noexcept { return coords_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return coords_.size(); }

  Rational square() const;
  bool is_zero() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Rational& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Rational& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator*(LatticeVector v, const Rational& s) { return v *= s; }

  /// Same coordinates on an equal lattice.
  friend bool operator==(const LatticeVector& a, const LatticeVector& b);

 private:
  LatticePtr lattice_;
  RationalVector coords_;
};

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

/// uᵀ·gram·v. Throws MismatchedLattice.
Rational inner(const LatticeVector& u, const LatticeVector& v);

/// True when v is a positive rational multiple of u (both nonzero).
bool positively_proportional(const LatticeVector& u, const LatticeVector& v);

/// Gram matrix (vᵢ·vⱼ) of a list of vectors on one lattice.
Matrix gram_matrix(std::span<const LatticeVector> vectors);

struct InertiaSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t size() const noexcept { return positive + negative + zero; }
  friend bool operator==(const InertiaSignature&, const InertiaSignature&) = default;
};

enum class DefinitenessClass { NegativeDefinite, NegativeSemiDefinite, HyperbolicSign, Other };

std::string_view to_string(DefinitenessClass c);

/// Inertia by exact symmetric congruence diagonalization. Throws NotSymmetric.
InertiaSignature signature(const Matrix& g);

DefinitenessClass definiteness_class(const Matrix& g);
DefinitenessClass definiteness_class(const InertiaSignature& s);

/// Signature (1, rank-1, 0).
bool is_hyperbolic(const BilinearLattice& lattice);

/// s_δ(x) = x - 2(x·δ)/δ² · δ. Throws IsotropicMirror when δ² = 0.
LatticeVector reflection(const LatticeVector& delta, const LatticeVector& x);

}  // namespace diagram
