#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagram {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto exit codes, so keep the grouping in exit_code() in sync.
enum class Errc {
  // core lattice
  MismatchedLattice,
  NotSymmetric,
  NotSquare,
  DimensionMismatch,
  IsotropicMirror,
  // families and graphs
  NonNegativeSquareMember,
  ProportionalMembers,
  DuplicateLabel,
  UnknownLabel,
  UnknownVertex,
  EmptySubset,
  EmptyGraph,
  EndpointInQ,
  DisconnectedSubset,
  FamilyTooLarge,
  NotHyperbolicAmbient,
  // geometry
  ZeroVector,
  NotFinitePoint,
  OppositeCones,
  NotNegativeSquare,
  NotIsotropicCenter,
  NormalsNotNegativeDefinite,
  NonPositiveRadius,
  // faces and weights
  NotAcuteAngled,
  AmbientNotHyperbolic,
  MalformedLattice,
  NoKFaces,
  BadDimensions,
  DomainViolation,
  NotSimpleInDim1,
  NotThreeDimensional,
  QNotElliptic,
  UnknownTheorem,
  MissingParam,
  ModeDataInvalid,
  NotFound,
  // surfaces
  InvalidModel,
  NotPseudoEffective,
  NotPseudoEffectiveAnticanonical,
  CanonicalTrivial,
  UnclassifiableCurve,
  GramNotNegativeDefinite,
  VariantMismatch,
  // input
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace diagram
