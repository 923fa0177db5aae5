#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagram/bounds.hpp"
#include "diagram/gram.hpp"

// Numerical surface models: a Neron-Severi lattice with canonical class, an ample
// reference class and a finite list of declared irreducible curves. Cones and
// nefness are always taken relative to the declared curves.
namespace diagram {

struct SurfaceModel {
  LatticePtr ns;
  LatticeVector canonical;
  LatticeVector ample;
  std::vector<std::pair<Label, LatticeVector>> curves;

  std::size_t index_of(const Label& label) const;  // throws UnknownLabel
};

/// Throws InvalidModel.
void validate_model(const SurfaceModel& model);

/// Declared curves with negative arithmetic genus (C² + C·K)/2 + 1.
std::vector<std::string> adjunction_warnings(const SurfaceModel& model);

/// Declared curves with C² < 0, in declaration order.
std::vector<Label> exceptional_curves(const SurfaceModel& model);

/// Extra constraint 0 ≤ δ·F ≤ bound.
struct ProductWindow {
  LatticeVector f;
  Rational bound;
};

/// Integral δ with every coordinate in [−height, height], δ² = square and δ·K = k_product,
/// in lexicographic coordinate order.
std::vector<LatticeVector> enumerate_classes(const LatticePtr& ns, const LatticeVector& k, const Rational& square,
                                             const Rational& k_product, long height,
                                             const std::vector<ProductWindow>& windows = {});

/// Lcm of the denominators of the inverse Gram matrix of F; bounds E·Fᵢ in the finiteness argument.
/// Throws GramNotNegativeDefinite.
Integer product_window_bound(const std::vector<LatticeVector>& f);

struct ZariskiDecomposition {
  LatticeVector p;
  /// Support curves with positive coefficients, in declaration order.
  std::vector<std::pair<Label, Rational>> n;
};

/// Throws NotPseudoEffective with the offending certificate in the message.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const LatticeVector& d);

enum class KodairaDim { Two, One, Zero, MinusInfinity };

std::string_view to_string(KodairaDim k);

KodairaDim numerical_kodaira(const SurfaceModel& model, const LatticeVector& d);

struct ExcPartition {
  std::vector<Label> exc1;
  std::vector<Label> exc2;
  std::vector<Label> exc3;
};

/// Throws CanonicalTrivial, NotPseudoEffectiveAnticanonical, UnclassifiableCurve.
ExcPartition classify_exc_partition(const SurfaceModel& model);

struct MoriPolyhedronType {
  enum class Kind { Elliptic, ParabolicAt, HyperbolicRel };
  Kind kind = Kind::Elliptic;
  /// Nef part of −K for ParabolicAt.
  std::optional<LatticeVector> p_ray;
  /// Support of N(−K) for HyperbolicRel; codim = its size.
  std::vector<Label> t_normals;
  std::size_t codim = 0;
};

std::string_view to_string(MoriPolyhedronType::Kind k);

/// Throws as classify_exc_partition.
MoriPolyhedronType mori_polyhedron_type(const SurfaceModel& model);

struct DuValComponent {
  std::vector<std::size_t> members;
  DynkinType type;
  bool du_val = false;
};

struct DiscrepancyReport {
  RationalVector alphas;
  LatticeVector pullback;
  bool orthogonal = false;
  bool almost_minimal = false;
  std::vector<DuValComponent> zero_components;
};

/// Solves Σ αᵢ(Fᵢ·Fⱼ) = K·Fⱼ. Throws GramNotNegativeDefinite.
DiscrepancyReport discrepancies(const LatticePtr& ns, const LatticeVector& k, const std::vector<LatticeVector>& f);

struct CombinationResult {
  bool member = false;
  /// Nonnegative coefficients when member.
  RationalVector coefficients;
  /// Otherwise f with f·gⱼ ≥ 0 for all generators and f·target < 0.
  std::optional<LatticeVector> separating;
};

CombinationResult is_nonnegative_combination(const LatticeVector& target, const std::vector<LatticeVector>& generators);

struct MoriGenerator {
  std::string label;
  LatticeVector cls;
  /// "Exc", "P" or "isotropic".
  std::string origin;
  bool extremal = false;
};

struct UngeneratedCurve {
  Label label;
  LatticeVector cls;
  Rational square;
  bool extremal = false;
};

struct MoriGeneratorReport {
  KodairaDim nu = KodairaDim::Two;
  std::vector<MoriGenerator> generators;
  /// Declared curves outside the cone of the generators.
  std::vector<UngeneratedCurve> ungenerated;
  /// ν = Two and an extremal square-zero declared curve is not generated by Exc.
  bool isotropic_fiber_discrepancy = false;
};

/// Throws as classify_exc_partition; ModeDataInvalid for non-isotropic extras.
MoriGeneratorReport mori_generators(const SurfaceModel& model, const std::vector<LatticeVector>& extra_isotropic);

struct SurfaceBoundReport {
  std::string variant;
  KodairaDim nu = KodairaDim::Two;
  ExcPartition exc;
  std::size_t d = 0;
  bool d_overridden = false;
  Metric metric = Metric::Rho;
  std::size_t subset_size = 0;
  EmpiricalConstants constants;
  BoundResult bound;
  /// dim NS for 3.4 and 3.5, n = #supp N(−K) for 3.6.
  long quantity = 0;
  bool satisfied = false;
};

/// Variants 3.4, 3.5, 3.5', 3.6, 3.6'. Throws VariantMismatch, UnknownTheorem.
SurfaceBoundReport surface_bound_report(const SurfaceModel& model, const std::string& variant,
                                        std::optional<std::size_t> d_override = std::nullopt);

}  // namespace diagram
