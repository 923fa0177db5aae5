#include "diagram/weights.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diagram/error.hpp"

namespace diagram {

namespace {

using VertexSet = std::vector<std::size_t>;

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string subset_name(const VectorFamily& family, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += family.label(s[i]);
  }
  return out + "}";
}

bool is_edge(const VertexSet& s) { return s.size() >= 2; }

struct Angles {
  std::map<std::pair<Subset, std::pair<std::size_t, std::size_t>>, Rational> weight;

  const Rational& at(const Subset& site, std::size_t a, std::size_t b) const {
    return weight.at({site, {std::min(a, b), std::max(a, b)}});
  }
};

// Records every pair inside each site, measured in the Gram graph of the site.
template <class WeightFn>
Angles collect(const FaceComplex& fc, const std::vector<Subset>& sites, std::size_t d, WeightFn fn, AngleWeightReport& r) {
  Angles out;
  for (const auto& site : sites) {
    const GramGraph g = build_gram_graph(fc.family(), site);
    for (std::size_t i = 0; i < site.size(); ++i) {
      for (std::size_t j = i + 1; j < site.size(); ++j) {
        AngleRecord rec{site, site[i], site[j], graph_distance(g, i, j), Rational(0)};
        rec.weight = fn(rec.distance, d);
        out.weight[{site, {site[i], site[j]}}] = rec.weight;
        r.angles.push_back(std::move(rec));
      }
    }
  }
  return out;
}

// A closed face has every edge bounded by exactly two vertices.
bool edges_closed(const FaceComplex& fc, const std::vector<Subset>& edges) {
  for (const auto& e : edges) {
    const std::size_t ends = fc.subfaces(e, fc.dimension()).size() + fc.infinite_vertices_of(e).size();
    if (ends != 2) return false;
  }
  return true;
}

}  // namespace

Rational two_angle_weight(const Distance& rho, std::size_t d) {
  if (!rho || *rho < 1 || *rho > 2 * d + 1) return 0;
  return 1;
}

Rational three_angle_weight(const Distance& rho, std::size_t d) {
  if (!rho || *rho < 1) return 0;
  if (*rho <= d) return 1;
  if (*rho <= 2 * d + 1) return Rational(1, 3);
  return 0;
}

ThreeFace make_three_face(std::vector<std::string> vertex_ids, const std::vector<std::vector<std::string>>& faces,
                          const std::vector<std::string>& infinite_ids) {
  ThreeFace tf;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) index.emplace(vertex_ids[i], i);
  tf.vertices = std::move(vertex_ids);
  tf.infinite.assign(tf.vertices.size(), false);
  for (const auto& id : infinite_ids) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(Errc::UnknownVertex, "unknown vertex '" + id + "'");
    tf.infinite[it->second] = true;
  }
  for (const auto& face : faces) {
    VertexSet vs;
    std::string name;
    for (const auto& id : face) {
      auto it = index.find(id);
      if (it == index.end()) throw Error(Errc::UnknownVertex, "unknown vertex '" + id + "'");
      vs.push_back(it->second);
      name += name.empty() ? id : "," + id;
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    tf.faces.push_back(std::move(vs));
    tf.face_ids.push_back("{" + name + "}");
  }
  return tf;
}

ThreeFace tetrahedron_three_face() {
  return make_three_face({"0", "1", "2", "3"}, {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

ThreeFace cube_three_face() {
  std::vector<std::string> ids;
  for (int v = 0; v < 8; ++v) ids.push_back(std::to_string(v));
  std::vector<std::vector<std::string>> faces;
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      std::vector<std::string> f;
      for (int v = 0; v < 8; ++v) {
        if (((v >> axis) & 1) == side) f.push_back(std::to_string(v));
      }
      faces.push_back(std::move(f));
    }
  }
  return make_three_face(std::move(ids), faces);
}

ThreeFace triangle_bipyramid_three_face() {
  return make_three_face({"n", "s", "1", "2", "3"}, {{"n", "1", "2"},
                                                      {"n", "2", "3"},
                                                      {"n", "1", "3"},
                                                      {"s", "1", "2"},
                                                      {"s", "2", "3"},
                                                      {"s", "1", "3"}});
}

std::vector<std::vector<std::size_t>> three_face_edges(const ThreeFace& tf) {
  std::set<VertexSet> edges;
  for (std::size_t i = 0; i < tf.faces.size(); ++i) {
    for (std::size_t j = i + 1; j < tf.faces.size(); ++j) {
      VertexSet e = intersect(tf.faces[i], tf.faces[j]);
      if (is_edge(e)) edges.insert(std::move(e));
    }
  }
  return {edges.begin(), edges.end()};
}

GoodSubsetReport good_subsets(const ThreeFace& tf) {
  const std::size_t k = tf.faces.size();
  if (k < 3) throw Error(Errc::NotThreeDimensional, "a 3-dimensional face has at least three 2-faces");
  for (const auto& f : tf.faces) {
    if (f.size() < 2) throw Error(Errc::NotThreeDimensional, "a 2-face needs at least two vertices");
    for (auto v : f) {
      if (v >= tf.vertices.size()) throw Error(Errc::UnknownVertex, "face names a missing vertex");
    }
  }
  GoodSubsetReport r;
  const auto& F = tf.faces;
  auto meet = [&](std::size_t a, std::size_t b) { return intersect(F[a], F[b]); };
  auto meet3 = [&](std::size_t a, std::size_t b, std::size_t c) { return intersect(meet(a, b), F[c]); };

  if (k == 4) {
    bool ok = intersect(meet(0, 1), meet(2, 3)).empty();
    for (std::size_t a = 0; a < 4 && ok; ++a) {
      for (std::size_t b = a + 1; b < 4 && ok; ++b) ok = is_edge(meet(a, b));
    }
    for (std::size_t skip = 0; skip < 4 && ok; ++skip) {
      std::vector<std::size_t> t;
      for (std::size_t x = 0; x < 4; ++x) {
        if (x != skip) t.push_back(x);
      }
      ok = meet3(t[0], t[1], t[2]).size() == 1;
    }
    if (ok) r.subsets.push_back({1, {0, 1, 2, 3}, Rational(3)});
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        if (!meet3(a, b, c).empty()) continue;
        if (is_edge(meet(a, b)) && is_edge(meet(b, c)) && is_edge(meet(a, c))) {
          r.subsets.push_back({2, {a, b, c}, Rational(2)});
          continue;
        }
        // Type 3: the middle face meets both others in edges, the outer two meet at infinity.
        const std::size_t order[3][3] = {{a, b, c}, {b, a, c}, {a, c, b}};
        for (const auto& o : order) {
          const VertexSet outer = meet(o[0], o[2]);
          if (is_edge(meet(o[0], o[1])) && is_edge(meet(o[1], o[2])) && outer.size() == 1 && tf.infinite[outer[0]]) {
            r.subsets.push_back({3, {o[0], o[1], o[2]}, Rational(1)});
          }
        }
      }
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        for (std::size_t e = c + 1; e < k; ++e) {
          const std::size_t q[4] = {a, b, c, e};
          bool triples_empty = true;
          for (std::size_t skip = 0; skip < 4 && triples_empty; ++skip) {
            std::vector<std::size_t> t;
            for (std::size_t x = 0; x < 4; ++x) {
              if (x != skip) t.push_back(q[x]);
            }
            triples_empty = meet3(t[0], t[1], t[2]).empty();
          }
          if (!triples_empty) continue;
          const std::size_t cycles[3][4] = {{a, b, c, e}, {a, b, e, c}, {a, c, b, e}};
          for (const auto& cy : cycles) {
            bool ok = true;
            for (std::size_t i = 0; i < 4 && ok; ++i) ok = is_edge(meet(cy[i], cy[(i + 1) % 4]));
            ok = ok && meet(cy[0], cy[2]).empty() && meet(cy[1], cy[3]).empty();
            if (ok) r.subsets.push_back({4, {cy[0], cy[1], cy[2], cy[3]}, Rational(1, 3)});
          }
        }
      }
    }
  }

  const auto edges = three_face_edges(tf);
  if (tf.vertices.size() == 5 && edges.size() == 9 && k == 6 &&
      std::all_of(F.begin(), F.end(), [](const VertexSet& f) { return f.size() == 3; })) {
    std::vector<std::size_t> degree(5, 0);
    for (const auto& e : edges) {
      for (auto v : e) ++degree[v];
    }
    std::sort(degree.begin(), degree.end());
    r.is_bad = degree == std::vector<std::size_t>{3, 3, 4, 4, 4};
  }
  return r;
}

namespace {

// The polyhedron itself is the face of codimension 0, keyed by the empty subset.
std::vector<Subset> faces_of_codim_or_top(const FaceComplex& fc, std::size_t codim) {
  if (codim == 0) return {Subset{}};
  return fc.faces_of_codim(codim);
}

}  // namespace

ThreeFace three_face_from_complex(const FaceComplex& fc, const Subset& key) {
  const std::size_t n = fc.dimension();
  if (n < 3 || key.size() + 3 != n || (!key.empty() && !fc.contains(key))) {
    throw Error(Errc::NotThreeDimensional, "key is not a 3-dimensional face of the complex");
  }
  const auto& family = fc.family();
  ThreeFace tf;
  std::map<Subset, std::size_t> finite_index;
  for (const auto& v : fc.subfaces(key, n)) {
    finite_index.emplace(v, tf.vertices.size());
    tf.vertices.push_back(subset_name(family, v));
    tf.infinite.push_back(false);
  }
  std::map<std::size_t, std::size_t> infinite_index;
  for (auto i : fc.infinite_vertices_of(key)) {
    infinite_index.emplace(i, tf.vertices.size());
    tf.vertices.push_back("inf" + std::to_string(i));
    tf.infinite.push_back(true);
  }
  for (const auto& t : fc.subfaces(key, n - 2)) {
    VertexSet vs;
    for (const auto& [v, idx] : finite_index) {
      if (std::includes(v.begin(), v.end(), t.begin(), t.end())) vs.push_back(idx);
    }
    for (auto i : fc.infinite_vertices_of(t)) {
      auto it = infinite_index.find(i);
      if (it != infinite_index.end()) vs.push_back(it->second);
    }
    std::sort(vs.begin(), vs.end());
    tf.faces.push_back(std::move(vs));
    tf.face_ids.push_back(subset_name(family, t));
  }
  return tf;
}

AngleWeightReport two_angle_weights(const FaceComplex& fc, std::size_t d, const Rational& c, const Rational& dconst) {
  AngleWeightReport r;
  const std::size_t n = fc.dimension();
  r.dimension = n;
  r.d = d;
  const auto& vertices = fc.vertices();
  const Angles angles = collect(fc, vertices, d, two_angle_weight, r);

  const Rational bound = c * static_cast<long>(n) + dconst;
  for (const auto& v : vertices) {
    SiteSum s{v, Rational(0), bound, false};
    for (const auto& rec : r.angles) {
      if (rec.site == v) s.sum += rec.weight;
    }
    s.holds = s.sum <= bound;
    r.condition1 = r.condition1 && s.holds;
    r.sites.push_back(std::move(s));
  }

  if (n < 2) return r;
  for (const auto& face : faces_of_codim_or_top(fc, n - 2)) {
    FaceSum fs;
    fs.face = face;
    const auto face_vertices = fc.subfaces(face, n);
    fs.k = face_vertices.size();
    fs.required = 5 - static_cast<long>(fs.k);
    for (const auto& v : face_vertices) {
      const Subset pair = difference(v, face);
      fs.sum += angles.at(v, pair[0], pair[1]);
    }
    const bool closed = fc.infinite_vertices_of(face).empty() && fs.k >= 3 && edges_closed(fc, fc.subfaces(face, n - 1));
    if (!closed) {
      fs.skipped = true;
      r.diagnostics.push_back("NonCompactVertexSkipped: 2-face " + subset_name(fc.family(), face) +
                              " is not a closed polygon of finite vertices");
    } else {
      fs.holds = fs.sum >= fs.required;
      r.condition2 = r.condition2 && fs.holds;
    }
    r.faces.push_back(std::move(fs));
  }
  return r;
}

AngleWeightReport three_angle_weights(const FaceComplex& fc, std::size_t d, const Rational& c) {
  AngleWeightReport r;
  const std::size_t n = fc.dimension();
  r.dimension = n;
  r.d = d;
  if (n < 1) return r;
  const auto& edges = fc.faces_of_codim(n - 1);
  const Angles angles = collect(fc, edges, d, three_angle_weight, r);

  const Rational bound = c * static_cast<long>(n - 1);
  for (const auto& e : edges) {
    SiteSum s{e, Rational(0), bound, false};
    for (const auto& rec : r.angles) {
      if (rec.site == e) s.sum += rec.weight;
    }
    s.holds = s.sum <= bound;
    r.condition1 = r.condition1 && s.holds;
    r.sites.push_back(std::move(s));
  }

  if (n < 3) return r;
  for (const auto& face : faces_of_codim_or_top(fc, n - 3)) {
    FaceSum fs;
    fs.face = face;
    const auto two_faces = fc.subfaces(face, n - 2);
    fs.k = two_faces.size();
    fs.required = 7 - static_cast<long>(fs.k);
    for (const auto& e : fc.subfaces(face, n - 1)) {
      const Subset pair = difference(e, face);
      fs.sum += angles.at(e, pair[0], pair[1]);
    }
    const ThreeFace tf = three_face_from_complex(fc, face);
    std::size_t vertex_count = tf.vertices.size();
    const bool closed = vertex_count >= 4 && fs.k >= 4 && edges_closed(fc, fc.subfaces(face, n - 1));
    if (!closed) {
      fs.skipped = true;
      r.diagnostics.push_back("NonCompactVertexSkipped: 3-face " + subset_name(fc.family(), face) +
                              " is not a closed polyhedron");
      r.faces.push_back(std::move(fs));
      continue;
    }
    const GoodSubsetReport good = good_subsets(tf);
    fs.bad = good.is_bad;
    for (const auto& g : good.subsets) {
      GoodSubsetSum gs{g, Rational(0)};
      std::vector<std::size_t> members;
      for (auto idx : g.faces) members.push_back(difference(two_faces[idx], face).front());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          Subset e = face;
          e.push_back(members[i]);
          e.push_back(members[j]);
          std::sort(e.begin(), e.end());
          if (fc.contains(e)) gs.sigma += angles.at(e, members[i], members[j]);
        }
      }
      fs.good.push_back(std::move(gs));
    }
    if (!fs.bad) {
      fs.holds = fs.sum >= fs.required;
      r.condition2 = r.condition2 && fs.holds;
    }
    r.faces.push_back(std::move(fs));
  }
  return r;
}

}  // namespace diagram
