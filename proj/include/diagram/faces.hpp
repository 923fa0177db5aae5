#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diagram/gram.hpp"

namespace diagram {

/// An infinite point: connected-parabolic subsets that are pairwise disjoint and
/// mutually orthogonal collapse to the same point at infinity.
struct InfiniteVertex {
  std::vector<Subset> components;
  /// Σ kᵢδᵢ over the first component with a nonzero kernel combination; may be zero
  /// when the members are linearly dependent in the lattice.
  LatticeVector point;
  /// Union of the components.
  Subset support;
};

/// Face lattice of an acute-angled polyhedron read off from its elliptic subsets.
/// A subset S is the face of codimension #S; bigger subsets are smaller faces.
class FaceComplex {
 public:
  FaceComplex(VectorFamily family, std::vector<Subset> faces, std::vector<InfiniteVertex> infinite);

  const VectorFamily& family() const noexcept { return family_; }
  /// dim Λ = rank − 1.
  std::size_t dimension() const noexcept { return dimension_; }
  /// Every elliptic subset, ordered by size then lexicographically.
  const std::vector<Subset>& faces() const noexcept { return faces_; }
  bool contains(const Subset& s) const;
  const std::vector<Subset>& faces_of_codim(std::size_t codim) const;
  const std::vector<Subset>& vertices() const { return faces_of_codim(dimension_); }
  /// Faces of the given codimension lying on `face` (supersets of its key).
  std::vector<Subset> subfaces(const Subset& face, std::size_t codim) const;
  /// Keys obtained by dropping one member; the facets of the poset above `face`.
  std::vector<Subset> covers(const Subset& face) const;

  const std::vector<InfiniteVertex>& infinite_vertices() const noexcept { return infinite_; }
  bool incident(const InfiniteVertex& v, const Subset& face) const;
  std::vector<std::size_t> infinite_vertices_of(const Subset& face) const;

 private:
  VectorFamily family_;
  std::size_t dimension_;
  std::vector<Subset> faces_;
  std::vector<std::vector<Subset>> by_codim_;
  std::vector<InfiniteVertex> infinite_;
};

/// Throws NotAcuteAngled, AmbientNotHyperbolic, FamilyTooLarge.
FaceComplex enumerate_finite_faces(const VectorFamily& family);

/// Exact feasibility of a ray x with x·δ = 0 on the subset and x·δ′ > 0 off it.
bool face_witness(const VectorFamily& family, const Subset& subset);

/// Combinatorial face lattice of an n-dimensional polyhedron; faces of dimension
/// 0..n−1 with cover or containment pairs (child, parent).
struct FaceLatticeInput {
  std::size_t dim = 0;
  std::vector<std::vector<std::string>> faces;
  std::vector<std::pair<std::string, std::string>> incidence;
};

/// Throws MalformedLattice.
void validate(const FaceLatticeInput& fl);

/// Every face of dimension m ≥ k lies in exactly n − m facets. Throws MalformedLattice.
bool is_simple_in_dimension(const FaceLatticeInput& fl, std::size_t k);

/// Incident (i,k) pairs over the number of k-faces. Throws BadDimensions, NoKFaces.
Rational face_average(const FaceLatticeInput& fl, long i, long k);

/// Upper bound for the (i,k) face average of a simple n-polytope. Throws DomainViolation.
Rational khovanskii_bound(long n, long i, long k);

struct FaceAverageCheck {
  long i = 0;
  long k = 0;
  Rational average;
  Rational bound;
  bool holds = false;
};

struct FaceAverageReport {
  std::size_t dim = 0;
  std::vector<FaceAverageCheck> checks;
  bool simple_in_dim0 = false;
  /// α0·n(n−1)/2 and α2·A^{0,2}; present when simple in dimension 0 and n ≥ 3.
  bool identity_checked = false;
  Rational identity_lhs;
  Rational identity_rhs;
  bool identity_holds = false;

  bool all_hold() const;
};

/// Throws NotSimpleInDim1.
FaceAverageReport check_face_average_bounds(const FaceLatticeInput& fl);

/// Face lattice of the n-cube; ids are strings over {-,+,*}. Throws DomainViolation for n ∉ [1,8].
FaceLatticeInput cube_face_lattice(std::size_t n);
/// Face lattice of the n-simplex; ids list the spanned vertices. Throws DomainViolation for n ∉ [1,8].
FaceLatticeInput simplex_face_lattice(std::size_t n);

/// Faces of dimension 0..dim Λ − 1 with cover incidences; infinite vertices are dropped.
FaceLatticeInput to_face_lattice(const FaceComplex& fc);

}  // namespace diagram
