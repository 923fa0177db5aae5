#include "diagram/klein.hpp"

#include <cmath>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"

namespace diagram::klein {

std::string_view to_string(PointType t) {
  switch (t) {
    case PointType::Finite: return "Finite";
    case PointType::Infinite: return "Infinite";
    case PointType::Outside: return "Outside";
  }
  return "Outside";
}

PointType point_type(const LatticeVector& x) {
  if (x.is_zero()) throw Error(Errc::ZeroVector, "the zero vector is not a point");
  const int s = sign(x.square());
  if (s > 0) return PointType::Finite;
  if (s == 0) return PointType::Infinite;
  return PointType::Outside;
}

Rational cosh_sq_distance(const LatticeVector& x, const LatticeVector& y) {
  const Rational x2 = x.square();
  const Rational y2 = y.square();
  if (x2 <= 0 || y2 <= 0) throw Error(Errc::NotFinitePoint, "distance needs x² > 0 and y² > 0");
  const Rational xy = inner(x, y);
  if (xy <= 0) throw Error(Errc::OppositeCones, "x and y lie in opposite half-cones");
  return xy * xy / (x2 * y2);
}

std::string_view to_string(PlanePairRelation::Kind k) {
  switch (k) {
    case PlanePairRelation::Kind::Angle: return "Angle";
    case PlanePairRelation::Kind::Parallel: return "Parallel";
    case PlanePairRelation::Kind::Hyperparallel: return "Hyperparallel";
  }
  return "Angle";
}

double PlanePairRelation::approximate() const {
  const double v = value.get_d();
  switch (kind) {
    case Kind::Angle: {
      const double c = std::sqrt(v);
      return std::acos(sign < 0 ? -c : c);
    }
    case Kind::Parallel: return 0.0;
    case Kind::Hyperparallel: return std::acosh(std::sqrt(v));
  }
  return 0.0;
}

PlanePairRelation plane_pair_relation(const LatticeVector& d1, const LatticeVector& d2) {
  const Rational s1 = d1.square();
  const Rational s2 = d2.square();
  if (s1 >= 0 || s2 >= 0) throw Error(Errc::NotNegativeSquare, "hyperplane normals need negative square");
  const Rational p = inner(d1, d2);
  const Rational t = p * p / (s1 * s2);
  PlanePairRelation r;
  r.sign = sign(p);
  r.value = t;
  if (t < 1) {
    r.kind = PlanePairRelation::Kind::Angle;
  } else if (t == 1) {
    r.kind = PlanePairRelation::Kind::Parallel;
  } else {
    r.kind = PlanePairRelation::Kind::Hyperparallel;
  }
  return r;
}

bool half_space_contains(const LatticeVector& delta, const LatticeVector& x) {
  if (delta.square() >= 0) throw Error(Errc::NotNegativeSquare, "half-space normal needs negative square");
  return inner(x, delta) >= 0;
}

bool horosphere_member(const LatticeVector& c, const Rational& radius, const LatticeVector& x) {
  if (c.is_zero() || c.square() != 0) throw Error(Errc::NotIsotropicCenter, "horosphere centre must be isotropic and nonzero");
  if (radius <= 0) throw Error(Errc::NonPositiveRadius, "horosphere constant must be positive");
  const Rational x2 = x.square();
  if (x2 <= 0) throw Error(Errc::NotFinitePoint, "horosphere membership needs x² > 0");
  const Rational xc = inner(x, c);
  return xc * xc == radius * radius * x2;
}

LatticeVector project_off(const LatticeVector& x, std::span<const LatticeVector> normals) {
  if (normals.empty()) return x;
  const Matrix g = gram_matrix(normals);
  if (definiteness_class(g) != DefinitenessClass::NegativeDefinite) {
    throw Error(Errc::NormalsNotNegativeDefinite, "normals must span a negative definite subspace");
  }
  RationalVector rhs;
  for (const auto& f : normals) rhs.push_back(inner(x, f));
  const auto coeffs = linalg::solve(g, rhs);  // g is invertible here
  LatticeVector out = x;
  for (std::size_t i = 0; i < normals.size(); ++i) out -= (*coeffs)[i] * normals[i];
  return out;
}

Rational cosh_sq_distance_to_subspace(const LatticeVector& x, std::span<const LatticeVector> normals) {
  const Rational x2 = x.square();
  if (x2 <= 0) throw Error(Errc::NotFinitePoint, "distance to a subspace needs x² > 0");
  const LatticeVector xp = project_off(x, normals);
  return xp.square() / x2;
}

}  // namespace diagram::klein
