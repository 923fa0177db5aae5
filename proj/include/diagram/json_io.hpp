#pragma once

#include <json.hpp>

#include "diagram/faces.hpp"
#include "diagram/gram.hpp"
#include "diagram/surface.hpp"

// JSON documents for the command-line front end. Inputs are read with insertion
// order preserved (member order is meaningful); outputs use sorted keys so the
// same value always prints the same bytes. Rationals are bare integers or "p/q".
namespace diagram::json_io {

using Json = nlohmann::json;
using InJson = nlohmann::ordered_json;

/// Integer literal or "p/q" string. Throws ParseError.
Rational rational_from(const InJson& j);
RationalVector vector_from(const InJson& j);
Matrix matrix_from(const InJson& j);

/// {"gram": [[…]]} or {"diagonal": […]}.
LatticePtr lattice_from(const InJson& j);
/// {"lattice": {...}, "vectors": {"label": […], …}} or {"labels": [...], "gram": [[…]]},
/// the latter taking the basis of the given Gram matrix as the family. "members":
/// [[label, […]], …] may replace "vectors".
VectorFamily family_from(const InJson& j);
/// {"ns": {...}, "K": […], "h": […], "curves": {"label": […], …}}; "curves" may also be
/// a list of [label, […]] pairs.
SurfaceModel model_from(const InJson& j);
/// {"dim": n, "faces": {"0": [ids], …}, "incidence": [[child, parent], …]}.
FaceLatticeInput face_lattice_from(const InJson& j);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const Matrix& m);
Json to_json(const LatticeVector& v);
Json lattice_to_json(const BilinearLattice& l);
Json family_to_json(const VectorFamily& f);
Json model_to_json(const SurfaceModel& m);
Json face_lattice_to_json(const FaceLatticeInput& fl);

}  // namespace diagram::json_io
