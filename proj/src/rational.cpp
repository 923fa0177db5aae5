#include "diagram/rational.hpp"

#include <cctype>

#include "diagram/error.hpp"

namespace diagram {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational value(Integer(std::string(num), 10), d);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MismatchedLattice: return "MismatchedLattice";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IsotropicMirror: return "IsotropicMirror";
    case Errc::NonNegativeSquareMember: return "NonNegativeSquareMember";
    case Errc::ProportionalMembers: return "ProportionalMembers";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::EndpointInQ: return "EndpointInQ";
    case Errc::DisconnectedSubset: return "DisconnectedSubset";
    case Errc::FamilyTooLarge: return "FamilyTooLarge";
    case Errc::NotHyperbolicAmbient: return "NotHyperbolicAmbient";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotFinitePoint: return "NotFinitePoint";
    case Errc::OppositeCones: return "OppositeCones";
    case Errc::NotNegativeSquare: return "NotNegativeSquare";
    case Errc::NotIsotropicCenter: return "NotIsotropicCenter";
    case Errc::NormalsNotNegativeDefinite: return "NormalsNotNegativeDefinite";
    case Errc::NonPositiveRadius: return "NonPositiveRadius";
    case Errc::NotAcuteAngled: return "NotAcuteAngled";
    case Errc::AmbientNotHyperbolic: return "AmbientNotHyperbolic";
    case Errc::MalformedLattice: return "MalformedLattice";
    case Errc::NoKFaces: return "NoKFaces";
    case Errc::BadDimensions: return "BadDimensions";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NotSimpleInDim1: return "NotSimpleInDim1";
    case Errc::NotThreeDimensional: return "NotThreeDimensional";
    case Errc::QNotElliptic: return "QNotElliptic";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::MissingParam: return "MissingParam";
    case Errc::ModeDataInvalid: return "ModeDataInvalid";
    case Errc::NotFound: return "NotFound";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::NotPseudoEffective: return "NotPseudoEffective";
    case Errc::NotPseudoEffectiveAnticanonical: return "NotPseudoEffectiveAnticanonical";
    case Errc::CanonicalTrivial: return "CanonicalTrivial";
    case Errc::UnclassifiableCurve: return "UnclassifiableCurve";
    case Errc::GramNotNegativeDefinite: return "GramNotNegativeDefinite";
    case Errc::VariantMismatch: return "VariantMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace diagram
