#include "diagram/faces.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"
#include "diagram/lp.hpp"

namespace diagram {

namespace {

InertiaSignature subset_signature(const VectorFamily& family, const Subset& s) {
  return signature(linalg::principal_submatrix(family.gram(), s));
}

bool by_size_then_lex(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool orthogonal_disjoint(const VectorFamily& family, const Subset& a, const Subset& b) {
  for (auto i : a) {
    for (auto j : b) {
      if (i == j || family.product(i, j) != 0) return false;
    }
  }
  return true;
}

// Σ kᵢδᵢ for the kernel vector k of a connected parabolic subset, k chosen positive.
LatticeVector kernel_point(const VectorFamily& family, const Subset& s) {
  const auto kernel = linalg::nullspace(linalg::principal_submatrix(family.gram(), s));
  LatticeVector c = LatticeVector::zero(family.lattice());
  if (kernel.empty()) return c;
  RationalVector k = kernel.front();
  const bool flip = std::any_of(k.begin(), k.end(), [](const Rational& x) { return x < 0; });
  for (std::size_t i = 0; i < s.size(); ++i) c += (flip ? -k[i] : k[i]) * family.vector(s[i]);
  return c;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FaceComplex::FaceComplex(VectorFamily family, std::vector<Subset> faces, std::vector<InfiniteVertex> infinite)
    : family_(std::move(family)), faces_(std::move(faces)), infinite_(std::move(infinite)) {
  dimension_ = family_.lattice()->rank() - 1;
  std::sort(faces_.begin(), faces_.end(), by_size_then_lex);
  by_codim_.assign(dimension_ + 2, {});
  for (const auto& f : faces_) {
    if (f.size() >= by_codim_.size()) by_codim_.resize(f.size() + 1);
    by_codim_[f.size()].push_back(f);
  }
}

bool FaceComplex::contains(const Subset& s) const {
  return std::binary_search(faces_.begin(), faces_.end(), s, by_size_then_lex);
}

const std::vector<Subset>& FaceComplex::faces_of_codim(std::size_t codim) const {
  static const std::vector<Subset> empty;
  return codim < by_codim_.size() ? by_codim_[codim] : empty;
}

std::vector<Subset> FaceComplex::subfaces(const Subset& face, std::size_t codim) const {
  std::vector<Subset> out;
  for (const auto& f : faces_of_codim(codim)) {
    if (std::includes(f.begin(), f.end(), face.begin(), face.end())) out.push_back(f);
  }
  return out;
}

std::vector<Subset> FaceComplex::covers(const Subset& face) const {
  std::vector<Subset> out;
  if (face.size() < 2) return out;
  for (std::size_t drop = 0; drop < face.size(); ++drop) {
    Subset c;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i != drop) c.push_back(face[i]);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FaceComplex::incident(const InfiniteVertex& v, const Subset& face) const {
  if (!v.point.is_zero()) {
    return std::all_of(face.begin(), face.end(), [&](std::size_t i) { return inner(family_.vector(i), v.point) == 0; });
  }
  return std::includes(v.support.begin(), v.support.end(), face.begin(), face.end());
}

std::vector<std::size_t> FaceComplex::infinite_vertices_of(const Subset& face) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < infinite_.size(); ++i) {
    if (incident(infinite_[i], face)) out.push_back(i);
  }
  return out;
}

FaceComplex enumerate_finite_faces(const VectorFamily& family) {
  if (!is_hyperbolic(*family.lattice())) throw Error(Errc::AmbientNotHyperbolic, "face complexes need a hyperbolic lattice");
  if (!family.is_acute()) throw Error(Errc::NotAcuteAngled, "some pair of members has negative product");
  const std::size_t m = family.size();
  if (m > 63) throw Error(Errc::FamilyTooLarge, "at most 63 members are supported");
  const std::size_t rank = family.lattice()->rank();

  std::vector<Subset> faces;
  std::vector<Subset> parabolic;
  std::vector<Subset> level;
  for (std::size_t i = 0; i < m; ++i) level.push_back({i});
  std::set<Subset> current(level.begin(), level.end());

  // Apriori growth: extend by a larger index, demand every one-smaller subset in the level.
  while (!level.empty()) {
    faces.insert(faces.end(), level.begin(), level.end());
    std::vector<Subset> next;
    for (const auto& s : level) {
      for (std::size_t j = s.back() + 1; j < m; ++j) {
        Subset t = s;
        t.push_back(j);
        bool closed = true;
        for (std::size_t drop = 0; drop + 1 < t.size() && closed; ++drop) {
          Subset u;
          for (std::size_t x = 0; x < t.size(); ++x) {
            if (x != drop) u.push_back(t[x]);
          }
          closed = current.count(u) > 0;
        }
        if (!closed) continue;
        const auto sig = subset_signature(family, t);
        if (sig.positive == 0 && sig.zero == 0) {
          next.push_back(std::move(t));
        } else if (sig.positive == 0 && t.size() <= rank && is_connected(build_gram_graph(family, t))) {
          parabolic.push_back(std::move(t));
        }
      }
    }
    current = std::set<Subset>(next.begin(), next.end());
    level = std::move(next);
  }
  // A single member is never parabolic (negative square), so pairs and up cover all cases.

  UnionFind uf(parabolic.size());
  for (std::size_t a = 0; a < parabolic.size(); ++a) {
    for (std::size_t b = a + 1; b < parabolic.size(); ++b) {
      if (orthogonal_disjoint(family, parabolic[a], parabolic[b])) uf.unite(a, b);
    }
  }
  std::map<std::size_t, InfiniteVertex> groups;
  for (std::size_t a = 0; a < parabolic.size(); ++a) {
    auto [it, fresh] = groups.try_emplace(uf.find(a), InfiniteVertex{{}, LatticeVector::zero(family.lattice()), {}});
    auto& v = it->second;
    v.components.push_back(parabolic[a]);
    if (v.point.is_zero()) v.point = kernel_point(family, parabolic[a]);
    Subset merged;
    std::set_union(v.support.begin(), v.support.end(), parabolic[a].begin(), parabolic[a].end(), std::back_inserter(merged));
    v.support = std::move(merged);
  }
  std::vector<InfiniteVertex> infinite;
  for (auto& [root, v] : groups) infinite.push_back(std::move(v));
  return FaceComplex(family, std::move(faces), std::move(infinite));
}

bool face_witness(const VectorFamily& family, const Subset& subset) {
  const std::size_t r = family.lattice()->rank();
  const Matrix& g = family.lattice()->gram();
  std::vector<bool> in(family.size(), false);
  for (auto i : subset) in.at(i) = true;
  const std::size_t others = family.size() - subset.size();
  // Variables x⁺, x⁻ ∈ Q^r and one slack per non-member: δ·x = 0 on the subset, δ′·x − s = 1 off it.
  Matrix a;
  RationalVector b;
  std::size_t slack = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    RationalVector row(2 * r + others, Rational(0));
    const auto& c = family.vector(i).coords();
    for (std::size_t col = 0; col < r; ++col) {
      Rational v = 0;
      for (std::size_t k = 0; k < r; ++k) v += c[k] * g[k][col];
      row[col] = v;
      row[r + col] = -v;
    }
    if (in[i]) {
      b.push_back(0);
    } else {
      row[2 * r + slack++] = -1;
      b.push_back(1);
    }
    a.push_back(std::move(row));
  }
  return lp::nonnegative_solution(a, b).feasible;
}

// ---------------------------------------------------------------------------
// Combinatorial face lattices

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Indexed {
  std::size_t n = 0;
  std::size_t total = 0;
  std::vector<std::size_t> dim_of;
  std::vector<std::vector<std::size_t>> by_dim;
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::size_t>> children;
};

Indexed index_lattice(const FaceLatticeInput& fl) {
  if (fl.dim == 0) throw Error(Errc::MalformedLattice, "dimension must be positive");
  if (fl.faces.size() > fl.dim) throw Error(Errc::MalformedLattice, "faces listed beyond dimension n-1");
  Indexed ix;
  ix.n = fl.dim;
  ix.by_dim.assign(fl.dim, {});
  std::map<std::string, std::size_t> id;
  for (std::size_t m = 0; m < fl.faces.size(); ++m) {
    for (const auto& name : fl.faces[m]) {
      if (!id.emplace(name, ix.total).second) throw Error(Errc::MalformedLattice, "duplicate face id '" + name + "'");
      ix.dim_of.push_back(m);
      ix.by_dim[m].push_back(ix.total++);
    }
  }
  if (ix.total == 0) throw Error(Errc::MalformedLattice, "no faces listed");
  ix.parents.assign(ix.total, {});
  ix.children.assign(ix.total, {});
  for (const auto& [c, p] : fl.incidence) {
    auto ci = id.find(c);
    auto pi = id.find(p);
    if (ci == id.end() || pi == id.end()) {
      throw Error(Errc::MalformedLattice, "incidence names unknown face '" + (ci == id.end() ? c : p) + "'");
    }
    if (ix.dim_of[ci->second] >= ix.dim_of[pi->second]) {
      throw Error(Errc::MalformedLattice, "incidence '" + c + "' < '" + p + "' does not lower dimension");
    }
    ix.parents[ci->second].push_back(pi->second);
    ix.children[pi->second].push_back(ci->second);
  }
  return ix;
}

// desc[f] = faces strictly below f.
std::vector<Bitset> descendants(const Indexed& ix) {
  std::vector<Bitset> desc(ix.total, Bitset(ix.total));
  for (std::size_t m = 0; m < ix.n; ++m) {
    for (auto f : ix.by_dim[m]) {
      for (auto c : ix.children[f]) {
        desc[f].set(c);
        desc[f] |= desc[c];
      }
    }
  }
  return desc;
}

}  // namespace

void validate(const FaceLatticeInput& fl) { (void)index_lattice(fl); }

bool is_simple_in_dimension(const FaceLatticeInput& fl, std::size_t k) {
  const Indexed ix = index_lattice(fl);
  const auto desc = descendants(ix);
  const auto& facets = ix.by_dim[ix.n - 1];
  for (std::size_t m = k; m < ix.n; ++m) {
    for (auto f : ix.by_dim[m]) {
      std::size_t count = 0;
      for (auto t : facets) {
        if (t == f || desc[t].test(f)) ++count;
      }
      if (count != ix.n - m) return false;
    }
  }
  return true;
}

Rational face_average(const FaceLatticeInput& fl, long i, long k) {
  if (i < 0 || i >= k || k > static_cast<long>(fl.dim) - 1) {
    throw Error(Errc::BadDimensions, "need 0 <= i < k <= n-1");
  }
  const Indexed ix = index_lattice(fl);
  const auto& kfaces = ix.by_dim[static_cast<std::size_t>(k)];
  if (kfaces.empty()) throw Error(Errc::NoKFaces, "no faces of dimension " + std::to_string(k));
  const auto desc = descendants(ix);
  long pairs = 0;
  for (auto f : kfaces) {
    for (auto g : ix.by_dim[static_cast<std::size_t>(i)]) {
      if (desc[f].test(g)) ++pairs;
    }
  }
  return Rational(pairs) / static_cast<long>(kfaces.size());
}

Rational khovanskii_bound(long n, long i, long k) {
  if (i < 0 || i >= k || n < 2 * k - 1) throw Error(Errc::DomainViolation, "need n >= 2k-1 and 0 <= i < k");
  const long lo = n / 2;
  const long hi = n - lo;
  const Integer num = binomial(n - i, n - k) * (binomial(lo, i) + binomial(hi, i));
  const Integer den = binomial(lo, k) + binomial(hi, k);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool FaceAverageReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const FaceAverageCheck& c) { return c.holds; }) &&
         (!identity_checked || identity_holds);
}

FaceAverageReport check_face_average_bounds(const FaceLatticeInput& fl) {
  if (!is_simple_in_dimension(fl, 1)) throw Error(Errc::NotSimpleInDim1, "face lattice is not simple in dimension 1");
  FaceAverageReport r;
  r.dim = fl.dim;
  const long n = static_cast<long>(fl.dim);
  const Indexed ix = index_lattice(fl);
  static constexpr std::pair<long, long> pairs[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}};
  for (auto [i, k] : pairs) {
    if (k > n - 1 || n < 2 * k - 1 || ix.by_dim[static_cast<std::size_t>(k)].empty()) continue;
    FaceAverageCheck c;
    c.i = i;
    c.k = k;
    c.average = face_average(fl, i, k);
    c.bound = khovanskii_bound(n, i, k);
    c.holds = c.average < c.bound;
    r.checks.push_back(c);
  }
  r.simple_in_dim0 = is_simple_in_dimension(fl, 0);
  if (r.simple_in_dim0 && n >= 3 && !ix.by_dim[2].empty()) {
    r.identity_checked = true;
    const Rational a0 = static_cast<long>(ix.by_dim[0].size());
    const Rational a2 = static_cast<long>(ix.by_dim[2].size());
    r.identity_lhs = a0 * Rational(n * (n - 1)) / 2;
    r.identity_rhs = a2 * face_average(fl, 0, 2);
    r.identity_holds = r.identity_lhs == r.identity_rhs;
  }
  return r;
}

FaceLatticeInput cube_face_lattice(std::size_t n) {
  if (n < 1 || n > 8) throw Error(Errc::DomainViolation, "cube generator supports 1 <= n <= 8");
  FaceLatticeInput fl;
  fl.dim = n;
  fl.faces.assign(n, {});
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  static constexpr char symbols[] = {'-', '+', '*'};
  for (std::size_t code = 0; code < total; ++code) {
    std::string id(n, '-');
    std::size_t c = code;
    std::size_t stars = 0;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      id[i] = symbols[c % 3];
      if (id[i] == '*') ++stars;
    }
    if (stars == n) continue;
    fl.faces[stars].push_back(id);
    for (std::size_t i = 0; i < n; ++i) {
      if (id[i] != '*') {
        std::string parent = id;
        parent[i] = '*';
        if (stars + 1 < n) fl.incidence.emplace_back(id, parent);
      }
    }
  }
  for (auto& level : fl.faces) std::sort(level.begin(), level.end());
  std::sort(fl.incidence.begin(), fl.incidence.end());
  return fl;
}

FaceLatticeInput simplex_face_lattice(std::size_t n) {
  if (n < 1 || n > 8) throw Error(Errc::DomainViolation, "simplex generator supports 1 <= n <= 8");
  FaceLatticeInput fl;
  fl.dim = n;
  fl.faces.assign(n, {});
  auto name = [](std::uint32_t mask) {
    std::string s;
    for (std::uint32_t v = 0; mask >> v; ++v) {
      if ((mask >> v) & 1U) {
        if (!s.empty()) s += ',';
        s += std::to_string(v);
      }
    }
    return s;
  };
  const std::uint32_t full = (std::uint32_t{1} << (n + 1)) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    fl.faces[size - 1].push_back(name(mask));
    if (size < 2) continue;
    for (std::uint32_t v = 0; v <= n; ++v) {
      if ((mask >> v) & 1U) fl.incidence.emplace_back(name(mask & ~(std::uint32_t{1} << v)), name(mask));
    }
  }
  for (auto& level : fl.faces) std::sort(level.begin(), level.end());
  std::sort(fl.incidence.begin(), fl.incidence.end());
  return fl;
}

FaceLatticeInput to_face_lattice(const FaceComplex& fc) {
  const std::size_t n = fc.dimension();
  const auto& family = fc.family();
  auto name = [&](const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += family.label(s[i]);
    }
    return out + "}";
  };
  FaceLatticeInput fl;
  fl.dim = n;
  fl.faces.assign(n, {});
  for (std::size_t codim = 1; codim <= n; ++codim) {
    for (const auto& s : fc.faces_of_codim(codim)) {
      fl.faces[n - codim].push_back(name(s));
      for (const auto& c : fc.covers(s)) fl.incidence.emplace_back(name(s), name(c));
    }
  }
  return fl;
}

}  // namespace diagram
