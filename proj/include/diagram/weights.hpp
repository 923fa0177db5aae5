#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diagram/faces.hpp"

namespace diagram {

/// σ = 1 iff 1 ≤ ρ ≤ 2d+1.
Rational two_angle_weight(const Distance& rho, std::size_t d);
/// σ = 1 for 1 ≤ ρ ≤ d, 1/3 for d+1 ≤ ρ ≤ 2d+1, 0 beyond.
Rational three_angle_weight(const Distance& rho, std::size_t d);

/// Combinatorics of a 3-dimensional face: vertices (some at infinity) and the
/// vertex sets of its 2-faces. Edges are the intersections of two 2-faces that
/// share at least two vertices.
struct ThreeFace {
  std::vector<std::string> vertices;
  std::vector<bool> infinite;
  std::vector<std::string> face_ids;
  std::vector<std::vector<std::size_t>> faces;  // sorted vertex indices
};

/// Builds a ThreeFace from vertex ids and 2-faces listed by vertex id. Infinite
/// vertices are those named in `infinite_ids`. Throws UnknownVertex.
ThreeFace make_three_face(std::vector<std::string> vertex_ids, const std::vector<std::vector<std::string>>& faces,
                          const std::vector<std::string>& infinite_ids = {});

ThreeFace tetrahedron_three_face();
ThreeFace cube_three_face();
ThreeFace triangle_bipyramid_three_face();

/// Edges as sorted vertex sets.
std::vector<std::vector<std::size_t>> three_face_edges(const ThreeFace& tf);

struct GoodSubset {
  int type = 0;
  /// Face indices; for types 3 and 4 in the cyclic order of the definition.
  std::vector<std::size_t> faces;
  Rational lower_bound;
};

struct GoodSubsetReport {
  std::vector<GoodSubset> subsets;
  bool is_bad = false;
};

/// Exhaustive search for good subsets of types 1-4 and the bad (triangle bipyramid) test.
/// Throws NotThreeDimensional.
GoodSubsetReport good_subsets(const ThreeFace& tf);

/// The 3-face of the complex with the given key (size dim Λ − 3). Throws NotThreeDimensional.
ThreeFace three_face_from_complex(const FaceComplex& fc, const Subset& key);

struct AngleRecord {
  Subset site;  // vertex (2-angles) or edge (3-angles)
  std::size_t first = 0;
  std::size_t second = 0;
  Distance distance;
  Rational weight;
};

struct SiteSum {
  Subset site;
  Rational sum;
  Rational bound;
  bool holds = false;
};

struct GoodSubsetSum {
  GoodSubset subset;
  Rational sigma;
};

struct FaceSum {
  Subset face;
  /// Vertices of a 2-face, or 2-faces of a 3-face.
  std::size_t k = 0;
  Rational sum;
  Rational required;
  bool skipped = false;
  bool bad = false;
  bool holds = true;
  std::vector<GoodSubsetSum> good;
};

struct AngleWeightReport {
  std::size_t dimension = 0;
  std::size_t d = 0;
  std::vector<AngleRecord> angles;
  std::vector<SiteSum> sites;
  std::vector<FaceSum> faces;
  /// NonCompactVertexSkipped notes for faces left out of condition (2).
  std::vector<std::string> diagnostics;
  bool condition1 = true;
  bool condition2 = true;
};

/// 2-angles at the vertices; condition (1) is sum ≤ C·n + D per vertex, condition (2)
/// is sum ≥ 5 − k per closed 2-face with k vertices.
AngleWeightReport two_angle_weights(const FaceComplex& fc, std::size_t d, const Rational& c, const Rational& dconst);

/// 3-angles along the edges; condition (1) is sum ≤ C·(n − 1) per edge, condition (2)
/// is σ(γ3) ≥ 7 − k per closed good 3-face with k two-dimensional faces.
AngleWeightReport three_angle_weights(const FaceComplex& fc, std::size_t d, const Rational& c);

}  // namespace diagram
