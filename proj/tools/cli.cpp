#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "diagram/bounds.hpp"
#include "diagram/error.hpp"
#include "diagram/faces.hpp"
#include "diagram/json_io.hpp"
#include "diagram/klein.hpp"
#include "diagram/linalg.hpp"
#include "diagram/surface.hpp"
#include "diagram/weights.hpp"

namespace diagram::cli {

namespace {

using json_io::InJson;
using json_io::Json;
using json_io::to_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::NotPseudoEffective:
    case Errc::NotPseudoEffectiveAnticanonical:
    case Errc::VariantMismatch:
    case Errc::UnclassifiableCurve:
    case Errc::CanonicalTrivial:
    case Errc::NotFound:
      return 3;
    case Errc::UnknownTheorem:
    case Errc::MissingParam:
      return 1;
    default:
      return 2;
  }
}

Rational flag_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("--" + name + " expects an exact rational, got '" + text + "'");
  }
}

std::size_t flag_count(const std::string& name, const std::string& text) {
  const Rational q = flag_rational(name, text);
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) {
    throw UsageError("--" + name + " expects a nonnegative integer, got '" + text + "'");
  }
  return q.get_num().get_ui();
}

InJson flag_json(const std::string& name, const std::string& text) {
  try {
    return InJson::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw UsageError("--" + name + " expects JSON, got '" + text + "'");
  }
}

LatticeVector flag_vector(const std::string& name, const std::string& text, const LatticePtr& lattice) {
  InJson j = flag_json(name, text);
  RationalVector v;
  try {
    v = json_io::vector_from(j);
  } catch (const Error&) {
    throw UsageError("--" + name + " expects a JSON array of rationals");
  }
  if (v.size() != lattice->rank()) {
    throw Error(Errc::DimensionMismatch, "--" + name + " has " + std::to_string(v.size()) + " coordinates, lattice rank is " +
                                             std::to_string(lattice->rank()));
  }
  return LatticeVector(lattice, std::move(v));
}

std::vector<LatticeVector> flag_vectors(const std::string& name, const std::string& text, const LatticePtr& lattice) {
  InJson j = flag_json(name, text);
  if (!j.is_array()) throw UsageError("--" + name + " expects a JSON array of vectors");
  std::vector<LatticeVector> out;
  for (const auto& row : j) out.push_back(flag_vector(name, row.dump(), lattice));
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json labels(const VectorFamily& f, const Subset& s) { return f.labels_of(s); }

Json distance_json(const Distance& d) { return d ? Json(*d) : Json("Infinite"); }

Json signature_json(const InertiaSignature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

LatticePtr lattice_of_document(const InJson& doc) {
  if (doc.is_object() && doc.contains("ns")) return json_io::lattice_from(doc.at("ns"));
  if (doc.is_object() && doc.contains("lattice")) return json_io::lattice_from(doc.at("lattice"));
  return json_io::lattice_from(doc);
}

void render_text(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << (path.empty() ? "value" : path) << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

Json angle_report_json(const FaceComplex& fc, const AngleWeightReport& r, bool three) {
  const auto& f = fc.family();
  Json angles = Json::array();
  for (const auto& a : r.angles) {
    angles.push_back({{"site", labels(f, a.site)},
                      {"pair", Json::array({f.label(a.first), f.label(a.second)})},
                      {"distance", distance_json(a.distance)},
                      {"weight", to_json(a.weight)}});
  }
  Json sites = Json::array();
  for (const auto& s : r.sites) {
    sites.push_back({{"site", labels(f, s.site)}, {"sum", to_json(s.sum)}, {"bound", to_json(s.bound)}, {"holds", s.holds}});
  }
  Json faces = Json::array();
  for (const auto& fs : r.faces) {
    Json entry{{"face", labels(f, fs.face)},
               {"k", fs.k},
               {"sum", to_json(fs.sum)},
               {"required", to_json(fs.required)},
               {"skipped", fs.skipped},
               {"holds", fs.holds}};
    if (three) {
      entry["bad"] = fs.bad;
      const auto two_faces = fc.subfaces(fs.face, fc.dimension() - 2);
      Json good = Json::array();
      for (const auto& g : fs.good) {
        Json ids = Json::array();
        for (auto idx : g.subset.faces) ids.push_back(labels(f, two_faces[idx]));
        good.push_back({{"type", g.subset.type},
                        {"faces", ids},
                        {"lower_bound", to_json(g.subset.lower_bound)},
                        {"sigma", to_json(g.sigma)}});
      }
      entry["good_subsets"] = good;
    }
    faces.push_back(entry);
  }
  return Json{{"dimension", r.dimension}, {"d", r.d},          {"angles", angles},
              {"sites", sites},           {"faces", faces},    {"diagnostics", r.diagnostics},
              {"condition1", r.condition1}, {"condition2", r.condition2}};
}

Json bound_json(const BoundResult& b) {
  Json inputs = Json::object();
  for (const auto& [k, v] : b.inputs) inputs[k] = to_json(v);
  Json out{{"theorem", b.theorem}, {"bound", to_json(b.value)}, {"bounds", b.bounds}, {"inputs", inputs}};
  if (b.satisfied) out["satisfied"] = *b.satisfied;
  return out;
}

Json exc_json(const ExcPartition& e) { return Json{{"exc1", e.exc1}, {"exc2", e.exc2}, {"exc3", e.exc3}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diagram-method computations for hyperbolic lattices and surface models", "diagram"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string input_path;
  std::string output_path;
  std::string format = "json";
  app.add_option("--input", input_path, "Input JSON file (default stdin)");
  app.add_option("--output", output_path, "Output file (default stdout)");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::map<std::string, std::string> opt;
  std::map<std::string, bool> flag;
  auto option = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = false) {
    auto* o = sub->add_option("--" + name, opt[sub->get_name() + "/" + name], help);
    if (required) o->required();
  };
  auto has = [&](CLI::App* sub, const std::string& name) { return sub->count("--" + name) > 0; };
  auto get = [&](CLI::App* sub, const std::string& name) { return opt[sub->get_name() + "/" + name]; };

  auto* lattice_sig = app.add_subcommand("lattice-sig", "Signature and definiteness of a lattice");
  auto* classify = app.add_subcommand("classify", "Classify subsets of a vector family");
  option(classify, "subset", "Comma-separated labels (default: every subset)");
  auto* lanner = app.add_subcommand("lanner", "Enumerate Lanner subsets and their diameters");
  option(lanner, "max-size", "Largest subset size to search");
  auto* faces = app.add_subcommand("faces", "Face complex from the elliptic subsets of a family");
  faces->add_flag("--witness", flag["witness"], "Check each face for a realizing ray");
  auto* faceavg = app.add_subcommand("faceavg", "Face averages against the Khovanskii bound");
  option(faceavg, "cube", "Use the n-cube face lattice");
  option(faceavg, "simplex", "Use the n-simplex face lattice");
  option(faceavg, "i", "Face dimension i");
  option(faceavg, "k", "Face dimension k");
  option(faceavg, "n", "Ambient dimension for --khovanskii");
  faceavg->add_flag("--khovanskii", flag["khovanskii"], "Print the bound for (n, i, k) only");
  auto* weights2 = app.add_subcommand("weights2", "2-angle weights at vertices");
  option(weights2, "d", "Lanner diameter bound d", true);
  option(weights2, "c", "Constant C (default 0)");
  option(weights2, "dconst", "Constant D (default 0)");
  auto* weights3 = app.add_subcommand("weights3", "3-angle weights along edges");
  option(weights3, "d", "Lanner diameter bound d", true);
  option(weights3, "c", "Constant C (default 0)");
  auto* constants = app.add_subcommand("constants", "Published constants against the bound formulas");
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a dimension bound");
  option(bound_cmd, "theorem", "Theorem id, e.g. 1.4.1", true);
  for (const char* name : {"c1", "c2", "c", "dconst", "dim-t", "n"}) option(bound_cmd, name, "Formula parameter");
  auto* findface = app.add_subcommand("findface", "Search for an elliptic face");
  option(findface, "mode", "parabolic or hyperbolic", true);
  option(findface, "c", "Isotropic vector (parabolic mode)");
  option(findface, "normals", "JSON list of normals (hyperbolic mode)");
  auto* geom = app.add_subcommand("geom", "Klein-model predicates");
  option(geom, "op", "point | distance | planes | halfspace | horosphere | subspace | reflect", true);
  for (const char* name : {"x", "y", "d1", "d2", "delta", "c", "radius", "normals"}) option(geom, name, "Operand");
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of a divisor");
  option(zariski, "divisor", "Divisor class as a JSON array", true);
  auto* kodaira = app.add_subcommand("kodaira", "Numerical Kodaira dimension of a divisor");
  option(kodaira, "divisor", "Divisor class as a JSON array (default -K)");
  auto* surface = app.add_subcommand("surface", "Surface model analysis");
  surface->require_subcommand(1);
  surface->fallthrough();
  auto* s_report = surface->add_subcommand("report", "Dimension bound for a surface variant");
  s_report->fallthrough();
  option(s_report, "variant", "3.4, 3.5, 3.5', 3.6 or 3.6'", true);
  option(s_report, "d", "Override the Lanner diameter d");
  auto* s_exc = surface->add_subcommand("exc", "Partition of the exceptional curves");
  s_exc->fallthrough();
  auto* s_type = surface->add_subcommand("type", "Mori polyhedron type");
  s_type->fallthrough();
  auto* s_curves = surface->add_subcommand("curves", "Exceptional curves and adjunction warnings");
  s_curves->fallthrough();
  auto* discrepancy = app.add_subcommand("discrepancy", "Discrepancies and Du Val detection");
  auto* mori = app.add_subcommand("mori", "Mori cone generators and extremality");
  option(mori, "isotropic", "JSON list of extra isotropic classes");
  auto* enumerate = app.add_subcommand("enumerate", "Bounded search for classes with given invariants");
  option(enumerate, "square", "Required square", true);
  option(enumerate, "kprod", "Required product with K", true);
  option(enumerate, "height", "Coordinate bound", true);
  option(enumerate, "window", "JSON list of {\"f\": [...], \"bound\": N}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::optional<InJson> doc_cache;
  auto document = [&]() -> const InJson& {
    if (!doc_cache) {
      try {
        if (input_path.empty()) {
          doc_cache = InJson::parse(in);
        } else {
          std::ifstream f(input_path);
          if (!f) throw Error(Errc::ParseError, "cannot open input file '" + input_path + "'");
          doc_cache = InJson::parse(f);
        }
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("input is not valid JSON: ") + e.what());
      }
    }
    return *doc_cache;
  };

  Json result;
  try {
    if (*lattice_sig) {
      const auto l = lattice_of_document(document());
      const auto sig = signature(l->gram());
      result = {{"rank", l->rank()},
                {"signature", signature_json(sig)},
                {"class", to_string(definiteness_class(sig))},
                {"hyperbolic", is_hyperbolic(*l)}};
    } else if (*classify) {
      const auto fam = json_io::family_from(document());
      auto describe = [&](const Subset& s) {
        const auto cls = classify_subset(fam, s);
        Json entry{{"subset", labels(fam, s)},
                   {"class", to_string(cls.kind)},
                   {"lanner", cls.is_lanner},
                   {"signature", signature_json(signature(linalg::principal_submatrix(fam.gram(), s)))}};
        if (cls.kind == SubsetClass::Kind::Elliptic || cls.kind == SubsetClass::Kind::ConnectedParabolic) {
          const GramGraph g = build_gram_graph(fam, s);
          Json types = Json::array();
          for (const auto& comp : connected_components(g)) {
            Subset part;
            for (auto v : comp) part.push_back(s[v]);
            std::sort(part.begin(), part.end());
            types.push_back(to_string(dynkin_type(fam, part)));
          }
          entry["dynkin"] = types;
        }
        return entry;
      };
      if (has(classify, "subset")) {
        const auto names = split_labels(get(classify, "subset"));
        if (names.empty()) throw Error(Errc::EmptySubset, "--subset names no labels");
        result = describe(fam.indices_of(names));
      } else {
        if (fam.size() > 16) throw Error(Errc::FamilyTooLarge, "exhaustive classification supports at most 16 members");
        Json all = Json::array();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << fam.size()); ++mask) {
          Subset s;
          for (std::size_t i = 0; i < fam.size(); ++i) {
            if ((mask >> i) & 1U) s.push_back(i);
          }
          all.push_back(describe(s));
        }
        result = {{"subsets", all}};
      }
    } else if (*lanner) {
      const auto fam = json_io::family_from(document());
      const std::size_t max_size = has(lanner, "max-size") ? flag_count("max-size", get(lanner, "max-size")) : fam.size();
      Json sets = Json::array();
      for (const auto& l : enumerate_lanner(fam, max_size)) {
        sets.push_back({{"subset", labels(fam, l)}, {"diameter", distance_json(diameter(build_gram_graph(fam, l)))}});
      }
      result = {{"lanner", sets}, {"d", distance_json(lanner_diameter_d(fam, max_size))}};
    } else if (*faces) {
      const auto fam = json_io::family_from(document());
      const FaceComplex fc = enumerate_finite_faces(fam);
      const std::size_t n = fc.dimension();
      Json list = Json::array();
      for (const auto& s : fc.faces()) {
        Json entry{{"subset", labels(fam, s)}, {"codim", s.size()}, {"dim", static_cast<long>(n) - static_cast<long>(s.size())}};
        if (flag["witness"]) entry["witness"] = face_witness(fam, s);
        list.push_back(entry);
      }
      Json counts = Json::array();
      for (std::size_t k = 0; k <= n; ++k) counts.push_back(k == 0 ? 1 : fc.faces_of_codim(k).size());
      Json vertices = Json::array();
      for (const auto& v : fc.vertices()) vertices.push_back(labels(fam, v));
      Json infinite = Json::array();
      for (const auto& iv : fc.infinite_vertices()) {
        Json comps = Json::array();
        for (const auto& c : iv.components) comps.push_back(labels(fam, c));
        infinite.push_back({{"components", comps}, {"point", to_json(iv.point)}});
      }
      result = {{"dimension", n},
                {"faces", list},
                {"counts_by_codim", counts},
                {"vertices", vertices},
                {"infinite_vertices", infinite}};
    } else if (*faceavg) {
      if (flag["khovanskii"]) {
        for (const char* name : {"n", "i", "k"}) {
          if (!has(faceavg, name)) throw UsageError(std::string("--khovanskii needs --") + name);
        }
        const long n = static_cast<long>(flag_count("n", get(faceavg, "n")));
        const long i = static_cast<long>(flag_count("i", get(faceavg, "i")));
        const long k = static_cast<long>(flag_count("k", get(faceavg, "k")));
        result = {{"n", n}, {"i", i}, {"k", k}, {"bound", to_json(khovanskii_bound(n, i, k))}};
      } else {
        FaceLatticeInput fl;
        if (has(faceavg, "cube")) {
          fl = cube_face_lattice(flag_count("cube", get(faceavg, "cube")));
        } else if (has(faceavg, "simplex")) {
          fl = simplex_face_lattice(flag_count("simplex", get(faceavg, "simplex")));
        } else {
          fl = json_io::face_lattice_from(document());
        }
        if (has(faceavg, "i") || has(faceavg, "k")) {
          if (!has(faceavg, "i") || !has(faceavg, "k")) throw UsageError("--i and --k go together");
          const long i = static_cast<long>(flag_count("i", get(faceavg, "i")));
          const long k = static_cast<long>(flag_count("k", get(faceavg, "k")));
          result = {{"dim", fl.dim}, {"i", i}, {"k", k}, {"average", to_json(face_average(fl, i, k))}};
        } else {
          const auto rep = check_face_average_bounds(fl);
          Json checks = Json::array();
          for (const auto& c : rep.checks) {
            checks.push_back({{"i", c.i}, {"k", c.k}, {"average", to_json(c.average)}, {"bound", to_json(c.bound)}, {"holds", c.holds}});
          }
          Json identity = nullptr;
          if (rep.identity_checked) {
            identity = {{"lhs", to_json(rep.identity_lhs)}, {"rhs", to_json(rep.identity_rhs)}, {"holds", rep.identity_holds}};
          }
          result = {{"dim", rep.dim},
                    {"simple_in_dim0", rep.simple_in_dim0},
                    {"checks", checks},
                    {"identity", identity},
                    {"all_hold", rep.all_hold()}};
        }
      }
    } else if (*weights2) {
      const FaceComplex fc = enumerate_finite_faces(json_io::family_from(document()));
      const std::size_t d = flag_count("d", get(weights2, "d"));
      const Rational c = has(weights2, "c") ? flag_rational("c", get(weights2, "c")) : Rational(0);
      const Rational dd = has(weights2, "dconst") ? flag_rational("dconst", get(weights2, "dconst")) : Rational(0);
      result = angle_report_json(fc, two_angle_weights(fc, d, c, dd), false);
    } else if (*weights3) {
      const FaceComplex fc = enumerate_finite_faces(json_io::family_from(document()));
      const std::size_t d = flag_count("d", get(weights3, "d"));
      const Rational c = has(weights3, "c") ? flag_rational("c", get(weights3, "c")) : Rational(0);
      result = angle_report_json(fc, three_angle_weights(fc, d, c), true);
    } else if (*constants) {
      Json rows = Json::array();
      for (const auto& r : recorded_constants()) {
        rows.push_back({{"source", r.source},
                        {"statement", r.statement},
                        {"published", to_json(r.published)},
                        {"plus_dim_T", r.plus_dim_t},
                        {"formula_theorem", r.formula_theorem},
                        {"formula_value", to_json(r.formula_value)},
                        {"discrepancy", r.discrepancy}});
      }
      result = {{"C1", 8}, {"C2", 9}, {"formula", "96(C1+C2/3)+68"}, {"constants", rows}};
    } else if (*bound_cmd) {
      std::map<std::string, Rational> params;
      const std::pair<const char*, const char*> keys[] = {{"c1", "C1"}, {"c2", "C2"}, {"c", "C"},
                                                         {"dconst", "D"}, {"dim-t", "dim_T"}, {"n", "n"}};
      for (const auto& [flag_name, key] : keys) {
        if (has(bound_cmd, flag_name)) params[key] = flag_rational(flag_name, get(bound_cmd, flag_name));
      }
      result = bound_json(bound(get(bound_cmd, "theorem"), params));
    } else if (*findface) {
      const auto fam = json_io::family_from(document());
      const std::string mode = get(findface, "mode");
      Subset face;
      if (mode == "parabolic") {
        if (!has(findface, "c")) throw UsageError("parabolic mode needs --c");
        face = find_elliptic_face(fam, ParabolicMode{flag_vector("c", get(findface, "c"), fam.lattice())});
      } else if (mode == "hyperbolic") {
        if (!has(findface, "normals")) throw UsageError("hyperbolic mode needs --normals");
        face = find_elliptic_face(fam, HyperbolicMode{flag_vectors("normals", get(findface, "normals"), fam.lattice())});
      } else {
        throw UsageError("--mode must be parabolic or hyperbolic");
      }
      result = {{"mode", mode}, {"face", labels(fam, face)}};
    } else if (*geom) {
      const auto l = lattice_of_document(document());
      const std::string op = get(geom, "op");
      auto vec = [&](const char* name) {
        if (!has(geom, name)) throw UsageError("--op " + op + " needs --" + name);
        return flag_vector(name, get(geom, name), l);
      };
      if (op == "point") {
        result = {{"type", klein::to_string(klein::point_type(vec("x")))}};
      } else if (op == "distance") {
        result = {{"cosh_sq", to_json(klein::cosh_sq_distance(vec("x"), vec("y")))}};
      } else if (op == "planes") {
        const auto rel = klein::plane_pair_relation(vec("d1"), vec("d2"));
        result = {{"relation", klein::to_string(rel.kind)}, {"value", to_json(rel.value)}, {"sign", rel.sign}};
      } else if (op == "halfspace") {
        result = {{"contains", klein::half_space_contains(vec("delta"), vec("x"))}};
      } else if (op == "horosphere") {
        if (!has(geom, "radius")) throw UsageError("--op horosphere needs --radius");
        result = {{"member", klein::horosphere_member(vec("c"), flag_rational("radius", get(geom, "radius")), vec("x"))}};
      } else if (op == "subspace") {
        if (!has(geom, "normals")) throw UsageError("--op subspace needs --normals");
        const auto normals = flag_vectors("normals", get(geom, "normals"), l);
        result = {{"cosh_sq", to_json(klein::cosh_sq_distance_to_subspace(vec("x"), normals))}};
      } else if (op == "reflect") {
        result = {{"image", to_json(reflection(vec("delta"), vec("x")))}};
      } else {
        throw UsageError("unknown --op '" + op + "'");
      }
    } else if (*zariski) {
      const auto model = json_io::model_from(document());
      const auto z = zariski_decompose(model, flag_vector("divisor", get(zariski, "divisor"), model.ns));
      Json n = Json::object();
      for (const auto& [label, a] : z.n) n[label] = to_json(a);
      result = {{"P", to_json(z.p)}, {"N", n}, {"P_square", to_json(z.p.square())}};
    } else if (*kodaira) {
      const auto model = json_io::model_from(document());
      const LatticeVector d =
          has(kodaira, "divisor") ? flag_vector("divisor", get(kodaira, "divisor"), model.ns) : -model.canonical;
      result = {{"kodaira", to_string(numerical_kodaira(model, d))}};
    } else if (*surface) {
      const auto model = json_io::model_from(document());
      if (*s_report) {
        std::optional<std::size_t> d;
        if (has(s_report, "d")) d = flag_count("d", get(s_report, "d"));
        const auto r = surface_bound_report(model, get(s_report, "variant"), d);
        result = {{"variant", r.variant},
                  {"nu", to_string(r.nu)},
                  {"exc", exc_json(r.exc)},
                  {"d", r.d},
                  {"d_overridden", r.d_overridden},
                  {"metric", r.metric == Metric::Rho ? "rho" : "rho_Q"},
                  {"subset_size", r.subset_size},
                  {"C1", to_json(r.constants.c1)},
                  {"C2", to_json(r.constants.c2)},
                  {"bound", to_json(r.bound.value)},
                  {"bounds", r.bound.bounds},
                  {"quantity", r.quantity},
                  {"satisfied", r.satisfied}};
      } else if (*s_exc) {
        result = exc_json(classify_exc_partition(model));
      } else if (*s_type) {
        const auto t = mori_polyhedron_type(model);
        result = {{"type", to_string(t.kind)}, {"t_normals", t.t_normals}, {"codim", t.codim}};
        if (t.p_ray) result["p_ray"] = to_json(*t.p_ray);
      } else if (*s_curves) {
        result = {{"exceptional", exceptional_curves(model)}, {"adjunction_warnings", adjunction_warnings(model)}};
      }
    } else if (*discrepancy) {
      const InJson& doc = document();
      const auto l = lattice_of_document(doc);
      if (!doc.contains("K") || !doc.contains("F")) throw Error(Errc::ParseError, "discrepancy input needs \"K\" and \"F\"");
      const LatticeVector k(l, json_io::vector_from(doc.at("K")));
      std::vector<LatticeVector> f;
      for (const auto& row : doc.at("F")) f.emplace_back(l, json_io::vector_from(row));
      const auto r = discrepancies(l, k, f);
      Json comps = Json::array();
      for (const auto& c : r.zero_components) {
        comps.push_back({{"members", c.members}, {"type", to_string(c.type)}, {"du_val", c.du_val}});
      }
      result = {{"alphas", to_json(r.alphas)},
                {"pullback", to_json(r.pullback)},
                {"orthogonal", r.orthogonal},
                {"almost_minimal", r.almost_minimal},
                {"zero_components", comps}};
    } else if (*mori) {
      const auto model = json_io::model_from(document());
      std::vector<LatticeVector> extra;
      if (has(mori, "isotropic")) extra = flag_vectors("isotropic", get(mori, "isotropic"), model.ns);
      const auto t = mori_polyhedron_type(model);
      const auto g = mori_generators(model, extra);
      Json gens = Json::array();
      for (const auto& x : g.generators) {
        gens.push_back({{"label", x.label}, {"class", to_json(x.cls)}, {"origin", x.origin}, {"extremal", x.extremal}});
      }
      Json outside = Json::array();
      for (const auto& u : g.ungenerated) {
        outside.push_back({{"label", u.label}, {"class", to_json(u.cls)}, {"square", to_json(u.square)}, {"extremal", u.extremal}});
      }
      result = {{"type", to_string(t.kind)},
                {"nu", to_string(g.nu)},
                {"generators", gens},
                {"ungenerated", outside},
                {"isotropic_fiber_discrepancy", g.isotropic_fiber_discrepancy}};
      if (t.p_ray) result["p_ray"] = to_json(*t.p_ray);
      if (t.kind == MoriPolyhedronType::Kind::HyperbolicRel) {
        result["t_normals"] = t.t_normals;
        result["codim"] = t.codim;
      }
    } else if (*enumerate) {
      const InJson& doc = document();
      const auto l = lattice_of_document(doc);
      if (!doc.contains("K")) throw Error(Errc::ParseError, "enumerate input needs \"K\"");
      const LatticeVector k(l, json_io::vector_from(doc.at("K")));
      std::vector<ProductWindow> windows;
      if (has(enumerate, "window")) {
        const InJson w = flag_json("window", get(enumerate, "window"));
        if (!w.is_array()) throw UsageError("--window expects a JSON list");
        for (const auto& item : w) {
          if (!item.is_object() || !item.contains("f") || !item.contains("bound")) {
            throw UsageError("--window entries are {\"f\": [...], \"bound\": N}");
          }
          windows.push_back({flag_vector("window", item.at("f").dump(), l), json_io::rational_from(item.at("bound"))});
        }
      }
      const long height = static_cast<long>(flag_count("height", get(enumerate, "height")));
      const auto classes = enumerate_classes(l, k, flag_rational("square", get(enumerate, "square")),
                                             flag_rational("kprod", get(enumerate, "kprod")), height, windows);
      Json list = Json::array();
      for (const auto& c : classes) list.push_back(to_json(c));
      result = {{"classes", list}, {"count", classes.size()}};
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }

  std::ostringstream rendered;
  if (format == "json") {
    rendered << result.dump(2) << "\n";
  } else {
    render_text(result, "", rendered);
  }
  if (output_path.empty()) {
    out << rendered.str();
  } else {
    std::ofstream f(output_path);
    if (!f) {
      err << "error: cannot open output file '" << output_path << "'\n";
      return 2;
    }
    f << rendered.str();
  }
  return 0;
}

}  // namespace diagram::cli
