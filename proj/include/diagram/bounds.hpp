#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagram/gram.hpp"

namespace diagram {

/// Bound evaluated from one of the dimension estimates. `inputs` holds the parameters
/// that entered the formula under the keys C1, C2, C, D, dim_T, n.
struct BoundResult {
  std::string theorem;
  std::map<std::string, Rational> inputs;
  Rational value;
  /// dim γ, dim Λ, dim NS or n.
  std::string bounds;
  /// Present when a value for the bounded quantity was supplied as "n".
  std::optional<bool> satisfied;
};

/// Accepted ids: 1.4.0 1.4.1 1.4.2 1.4.2' 1.4.3 1.4.3' 1.5.1.1 1.5.1.4 1.5.2.4
/// 3.4 3.5 3.5' 3.6 3.6' (the Unicode prime is accepted too).
/// Throws UnknownTheorem, MissingParam.
BoundResult bound(const std::string& theorem_id, const std::map<std::string, Rational>& params);

std::vector<std::string> known_theorems();

/// A published constant next to the formula it should follow from at C1 = 8, C2 = 9.
struct RecordedConstant {
  std::string source;
  std::string statement;
  /// Published additive constant (the part before "+ dim 𝒯" in the hyperbolic cases).
  Rational published;
  bool plus_dim_t = false;
  std::string formula_theorem;
  Rational formula_value;
  bool discrepancy = false;
};

std::vector<RecordedConstant> recorded_constants();

/// Maximum Gram-graph diameter over Lanner subsets of size ≤ max_size; 0 when none.
Distance lanner_diameter_d(const VectorFamily& family, std::size_t max_size);

enum class Metric { Rho, RhoQ };

struct EmpiricalConstants {
  Rational c1;
  Rational c2;
  std::size_t subsets_examined = 0;
};

/// Max over elliptic ℰ ⊇ Q with #ℰ = subset_size of the per-element pair counts in
/// ℰ − Q at distance [1, d] (C1) and [d+1, 2d+1] (C2). Throws QNotElliptic.
EmpiricalConstants empirical_constants(const VectorFamily& family, const Subset& q, std::size_t subset_size, Metric metric,
                                       std::size_t d);

struct ParabolicMode {
  LatticeVector c;
};
struct HyperbolicMode {
  std::vector<LatticeVector> normals;
};
using FaceSearchMode = std::variant<ParabolicMode, HyperbolicMode>;

/// Parabolic: first δ with δ·c ≠ 0 whose pairs with its Gram neighbours are all elliptic.
/// Hyperbolic: first elliptic subset (by size, then order) of members outside span(F).
/// Throws NotAcuteAngled, ModeDataInvalid, NotFound.
Subset find_elliptic_face(const VectorFamily& family, const FaceSearchMode& mode);

}  // namespace diagram
