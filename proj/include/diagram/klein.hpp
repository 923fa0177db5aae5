#pragma once

#include <span>
#include <string_view>

#include "diagram/lattice.hpp"

// Exact predicates in the projective (Klein) model of Lobachevsky space:
// points are rays of a hyperbolic lattice, hyperplanes are orthogonal
// complements of negative-square vectors. Distances and angles are reported
// as squared normalized invariants so every decision stays rational.
namespace diagram::klein {

enum class PointType { Finite, Infinite, Outside };

std::string_view to_string(PointType t);

/// Throws ZeroVector.
PointType point_type(const LatticeVector& x);

/// cosh²ρ between the rays of x and y: (x·y)² / (x²·y²).
/// Throws NotFinitePoint unless x², y² > 0; OppositeCones unless x·y > 0.
Rational cosh_sq_distance(const LatticeVector& x, const LatticeVector& y);

struct PlanePairRelation {
  enum class Kind { Angle, Parallel, Hyperparallel };
  Kind kind = Kind::Angle;
  /// cos² of the angle (Angle), 1 (Parallel) or cosh² of the distance (Hyperparallel).
  Rational value;
  /// Sign of d1·d2.
  int sign = 0;

  /// Non-authoritative floating convenience: angle in radians or distance.
  double approximate() const;
};

std::string_view to_string(PlanePairRelation::Kind k);

/// Classifies by t = (d1·d2)² / (d1²·d2²). Throws NotNegativeSquare.
PlanePairRelation plane_pair_relation(const LatticeVector& d1, const LatticeVector& d2);

/// x·δ ≥ 0. Throws NotNegativeSquare.
bool half_space_contains(const LatticeVector& delta, const LatticeVector& x);

/// Projective horosphere test (x·c)² = R²·x² for the horosphere centred at ℝ⁺c.
/// Throws NotIsotropicCenter, NotFinitePoint, NonPositiveRadius.
bool horosphere_member(const LatticeVector& c, const Rational& radius, const LatticeVector& x);

/// Orthogonal projection of x onto the complement of span(normals).
/// Throws NormalsNotNegativeDefinite.
LatticeVector project_off(const LatticeVector& x, std::span<const LatticeVector> normals);

/// cosh² of the distance from ℝ⁺x to the subspace cut out by the normals:
/// x′²/x² with x′ the projection above. Throws NotFinitePoint.
Rational cosh_sq_distance_to_subspace(const LatticeVector& x, std::span<const LatticeVector> normals);

}  // namespace diagram::klein
