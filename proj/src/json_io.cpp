#include "diagram/json_io.hpp"

#include <limits>

#include "diagram/error.hpp"

namespace diagram::json_io {

namespace {

// Either {"label": coords, …} or [[label, coords], …], keeping the given order.
std::vector<std::pair<Label, RationalVector>> labeled_vectors(const InJson& j, const char* what) {
  std::vector<std::pair<Label, RationalVector>> out;
  if (j.is_object()) {
    for (const auto& [label, coords] : j.items()) out.emplace_back(label, vector_from(coords));
    return out;
  }
  if (j.is_array()) {
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string()) {
        throw Error(Errc::ParseError, std::string(what) + " entries are [label, coordinates] pairs");
      }
      out.emplace_back(pair[0].get<std::string>(), vector_from(pair[1]));
    }
    return out;
  }
  throw Error(Errc::ParseError, std::string(what) + " must map labels to coordinates");
}

const InJson& field(const InJson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Rational rational_from(const InJson& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_rational(std::to_string(j.get<unsigned long long>()));
    return parse_rational(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

RationalVector vector_from(const InJson& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of rationals, got " + j.dump());
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from(x));
  return out;
}

Matrix matrix_from(const InJson& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of rows");
  Matrix out;
  for (const auto& row : j) out.push_back(vector_from(row));
  return out;
}

LatticePtr lattice_from(const InJson& j) {
  LatticePtr out;
  if (j.is_object() && j.contains("gram")) {
    out = make_lattice(matrix_from(j.at("gram")));
  } else if (j.is_object() && j.contains("diagonal")) {
    out = diagonal_lattice(vector_from(j.at("diagonal")));
  } else {
    throw Error(Errc::ParseError, "lattice needs \"gram\" or \"diagonal\"");
  }
  if (j.contains("rank") && (!j.at("rank").is_number_integer() || j.at("rank").get<long long>() != static_cast<long long>(out->rank()))) {
    throw Error(Errc::ParseError, "\"rank\" disagrees with the Gram matrix size");
  }
  return out;
}

VectorFamily family_from(const InJson& j) {
  if (j.is_object() && j.contains("labels") && j.contains("gram")) {
    const auto lattice = make_lattice(matrix_from(j.at("gram")));
    const auto& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != lattice->rank()) {
      throw Error(Errc::ParseError, "\"labels\" must name every basis vector");
    }
    std::vector<std::pair<Label, LatticeVector>> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) throw Error(Errc::ParseError, "labels must be strings");
      members.emplace_back(labels[i].get<std::string>(), LatticeVector::basis(lattice, i));
    }
    return VectorFamily(lattice, std::move(members));
  }
  const auto lattice = lattice_from(field(j, "lattice"));
  const auto& vectors = j.contains("members") ? j.at("members") : field(j, "vectors");
  std::vector<std::pair<Label, LatticeVector>> members;
  for (auto& [label, coords] : labeled_vectors(vectors, "vectors")) members.emplace_back(label, LatticeVector(lattice, coords));
  return VectorFamily(lattice, std::move(members));
}

SurfaceModel model_from(const InJson& j) {
  SurfaceModel m{lattice_from(field(j, "ns")), LatticeVector::zero(make_lattice({{1}})), LatticeVector::zero(make_lattice({{1}})), {}};
  m.canonical = LatticeVector(m.ns, vector_from(field(j, "K")));
  m.ample = LatticeVector(m.ns, vector_from(field(j, "h")));
  for (auto& [label, coords] : labeled_vectors(field(j, "curves"), "curves")) m.curves.emplace_back(label, LatticeVector(m.ns, coords));
  validate_model(m);
  return m;
}

FaceLatticeInput face_lattice_from(const InJson& j) {
  FaceLatticeInput fl;
  const auto& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw Error(Errc::ParseError, "\"dim\" must be a positive integer");
  fl.dim = dim.get<std::size_t>();
  fl.faces.assign(fl.dim, {});
  const auto& faces = field(j, "faces");
  if (!faces.is_object()) throw Error(Errc::ParseError, "\"faces\" must map dimensions to id lists");
  for (const auto& [key, ids] : faces.items()) {
    std::size_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "face dimension key '" + key + "' is not an integer");
    }
    if (m >= fl.dim) throw Error(Errc::MalformedLattice, "faces listed in dimension " + key + " >= n");
    if (!ids.is_array()) throw Error(Errc::ParseError, "face ids must be an array");
    for (const auto& id : ids) {
      if (!id.is_string()) throw Error(Errc::ParseError, "face ids must be strings");
      fl.faces[m].push_back(id.get<std::string>());
    }
  }
  if (j.contains("incidence")) {
    for (const auto& pair : j.at("incidence")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw Error(Errc::ParseError, "incidence entries are [child, parent] id pairs");
      }
      fl.incidence.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  validate(fl);
  return fl;
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const LatticeVector& v) { return to_json(v.coords()); }

Json lattice_to_json(const BilinearLattice& l) { return Json{{"rank", l.rank()}, {"gram", to_json(l.gram())}}; }

Json family_to_json(const VectorFamily& f) {
  // Sorted keys would lose member order, so vectors go out as [label, coords] pairs.
  Json vectors = Json::array();
  for (const auto& [label, v] : f.members()) vectors.push_back(Json::array({label, to_json(v)}));
  return Json{{"lattice", lattice_to_json(*f.lattice())}, {"members", vectors}};
}

Json model_to_json(const SurfaceModel& m) {
  Json curves = Json::array();
  for (const auto& [label, v] : m.curves) curves.push_back(Json::array({label, to_json(v)}));
  return Json{{"ns", lattice_to_json(*m.ns)}, {"K", to_json(m.canonical)}, {"h", to_json(m.ample)}, {"curves", curves}};
}

Json face_lattice_to_json(const FaceLatticeInput& fl) {
  Json faces = Json::object();
  for (std::size_t m = 0; m < fl.faces.size(); ++m) faces[std::to_string(m)] = fl.faces[m];
  Json inc = Json::array();
  for (const auto& [c, p] : fl.incidence) inc.push_back(Json::array({c, p}));
  return Json{{"dim", fl.dim}, {"faces", faces}, {"incidence", inc}};
}

}  // namespace diagram::json_io
