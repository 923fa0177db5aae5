#include "diagram/gram.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>

#include "diagram/error.hpp"
#include "diagram/linalg.hpp"

namespace diagram {

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const Subset&)>& f) {
  if (k > n) return;
  Subset c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    f(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

InertiaSignature subset_signature(const VectorFamily& family, const Subset& subset) {
  return signature(linalg::principal_submatrix(family.gram(), subset));
}

}  // namespace

VectorFamily::VectorFamily(LatticePtr lattice, std::vector<std::pair<Label, LatticeVector>> members)
    : lattice_(std::move(lattice)), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& [label, vec] = members_[i];
    if (!same_lattice(vec.lattice(), lattice_)) {
      throw Error(Errc::MismatchedLattice, "member '" + label + "' is on another lattice");
    }
    if (vec.square() >= 0) {
      throw Error(Errc::NonNegativeSquareMember, "member '" + label + "' has square " + to_string(vec.square()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (members_[j].first == label) throw Error(Errc::DuplicateLabel, "label '" + label + "' repeated");
      if (positively_proportional(members_[j].second, vec)) {
        throw Error(Errc::ProportionalMembers, "'" + members_[j].first + "' and '" + label + "' are proportional");
      }
    }
  }
  std::vector<LatticeVector> vecs;
  vecs.reserve(members_.size());
  for (const auto& m : members_) vecs.push_back(m.second);
  gram_ = gram_matrix(vecs);
}

std::size_t VectorFamily::index_of(const Label& label) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].first == label) return i;
  }
  throw Error(Errc::UnknownLabel, "no member labeled '" + label + "'");
}

Subset VectorFamily::indices_of(std::span<const Label> labels) const {
  Subset out;
  for (const auto& l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Label> VectorFamily::labels_of(const Subset& subset) const {
  std::vector<Label> out;
  for (auto i : subset) out.push_back(label(i));
  return out;
}

bool VectorFamily::is_acute() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (gram_[i][j] < 0) return false;
    }
  }
  return true;
}

GramGraph::GramGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
  for (const auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) throw Error(Errc::UnknownVertex, "edge endpoint out of range");
    if (e.u == e.v) throw Error(Errc::MalformedLattice, "self-loop in Gram graph");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

std::size_t GramGraph::index_of(const Label& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].label == label) return i;
  }
  throw Error(Errc::UnknownVertex, "no vertex labeled '" + label + "'");
}

GramGraph build_gram_graph(const VectorFamily& family, const Subset& subset) {
  std::vector<GramGraph::Vertex> vertices;
  std::vector<GramGraph::Edge> edges;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    vertices.push_back({family.label(subset[a]), -family.product(subset[a], subset[a])});
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const Rational& w = family.product(subset[a], subset[b]);
      if (w != 0) edges.push_back({a, b, w});
    }
  }
  return GramGraph(std::move(vertices), std::move(edges));
}

GramGraph build_gram_graph(const VectorFamily& family) {
  Subset all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_gram_graph(family, all);
}

std::string to_string(const Distance& d) { return d ? std::to_string(*d) : std::string("Infinite"); }

Distance graph_distance(const GramGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.size() || v >= g.size()) throw Error(Errc::UnknownVertex, "vertex index out of range");
  return rho_q(g, std::vector<bool>(g.size(), false), u, v);
}

Distance graph_distance(const GramGraph& g, const Label& u, const Label& v) {
  return graph_distance(g, g.index_of(u), g.index_of(v));
}

// 0-1 BFS: stepping onto a Q-vertex costs 0, any other step costs 1. Every walk
// shortens to a simple path of no larger cost, and on a simple path the cost equals
// length minus the number of interior Q-vertices.
Distance rho_q(const GramGraph& g, const std::vector<bool>& in_q, std::size_t u, std::size_t v) {
  if (u >= g.size() || v >= g.size()) throw Error(Errc::UnknownVertex, "vertex index out of range");
  if (in_q.size() != g.size()) throw Error(Errc::DimensionMismatch, "Q mask size differs from graph size");
  if (in_q[u] || in_q[v]) throw Error(Errc::EndpointInQ, "endpoints of rho_Q must lie outside Q");
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kInf);
  std::deque<std::size_t> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto y : g.neighbors(x)) {
      const std::size_t w = in_q[y] ? 0 : 1;
      if (dist[x] + w < dist[y]) {
        dist[y] = dist[x] + w;
        if (w == 0) {
          queue.push_front(y);
        } else {
          queue.push_back(y);
        }
      }
    }
  }
  if (dist[v] == kInf) return std::nullopt;
  return dist[v];
}

Distance rho_q(const GramGraph& g, std::span<const Label> q, const Label& u, const Label& v) {
  std::vector<bool> in_q(g.size(), false);
  for (const auto& l : q) in_q[g.index_of(l)] = true;
  return rho_q(g, in_q, g.index_of(u), g.index_of(v));
}

Distance diameter(const GramGraph& g) {
  if (g.size() == 0) throw Error(Errc::EmptyGraph, "diameter of an empty graph");
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      const auto d = graph_distance(g, u, v);
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

std::vector<std::vector<std::size_t>> connected_components(const GramGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (auto y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const GramGraph& g) { return connected_components(g).size() <= 1; }

std::string_view to_string(SubsetClass::Kind kind) {
  switch (kind) {
    case SubsetClass::Kind::Elliptic: return "Elliptic";
    case SubsetClass::Kind::ConnectedParabolic: return "ConnectedParabolic";
    case SubsetClass::Kind::NonHyperbolicMixed: return "NonHyperbolicMixed";
    case SubsetClass::Kind::Hyperbolic: return "Hyperbolic";
  }
  return "Elliptic";
}

bool is_hyperbolic_subset(const VectorFamily& family, const Subset& subset) {
  const auto sig = subset_signature(family, subset);
  if (sig.positive > 1) {
    throw Error(Errc::NotHyperbolicAmbient, "subset Gram matrix has " + std::to_string(sig.positive) + " positive squares");
  }
  return sig.positive == 1;
}

bool is_elliptic_subset(const VectorFamily& family, const Subset& subset) {
  const auto sig = subset_signature(family, subset);
  return sig.positive == 0 && sig.zero == 0;
}

SubsetClass classify_subset(const VectorFamily& family, const Subset& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "classification of an empty subset");
  for (auto i : subset) {
    if (i >= family.size()) throw Error(Errc::UnknownLabel, "member index out of range");
  }
  const auto sig = subset_signature(family, subset);
  if (sig.positive > 1) {
    throw Error(Errc::NotHyperbolicAmbient, "subset Gram matrix has " + std::to_string(sig.positive) + " positive squares");
  }
  SubsetClass out;
  if (sig.positive == 1) {
    out.kind = SubsetClass::Kind::Hyperbolic;
    // Hyperbolicity is inherited by supersets, so minimality only needs the
    // subsets with one element removed.
    out.is_lanner = true;
    for (std::size_t drop = 0; drop < subset.size() && out.is_lanner; ++drop) {
      Subset smaller;
      for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k != drop) smaller.push_back(subset[k]);
      }
      if (!smaller.empty() && is_hyperbolic_subset(family, smaller)) out.is_lanner = false;
    }
    return out;
  }
  if (sig.zero == 0) {
    out.kind = SubsetClass::Kind::Elliptic;
  } else if (is_connected(build_gram_graph(family, subset))) {
    out.kind = SubsetClass::Kind::ConnectedParabolic;
  } else {
    out.kind = SubsetClass::Kind::NonHyperbolicMixed;
  }
  return out;
}

SubsetClass classify_subset(const VectorFamily& family, std::span<const Label> labels) {
  if (labels.empty()) throw Error(Errc::EmptySubset, "classification of an empty subset");
  return classify_subset(family, family.indices_of(labels));
}

std::vector<Subset> enumerate_lanner(const VectorFamily& family, std::size_t max_size) {
  if (family.size() > 63) throw Error(Errc::FamilyTooLarge, "Lanner enumeration supports at most 63 members");
  max_size = std::min(max_size, family.size());
  std::vector<Subset> found;
  std::vector<std::uint64_t> found_masks;
  // Sizes are visited in increasing order, so a hyperbolic subset containing no
  // previously found Lanner subset is itself minimal.
  for (std::size_t k = 2; k <= max_size; ++k) {
    for_each_combination(family.size(), k, [&](const Subset& s) {
      const auto m = mask_of(s);
      for (auto fm : found_masks) {
        if ((fm & m) == fm) return;
      }
      if (is_hyperbolic_subset(family, s)) {
        found.push_back(s);
        found_masks.push_back(m);
      }
    });
  }
  return found;
}

std::string to_string(const DynkinType& t) {
  using K = DynkinType::Kind;
  switch (t.kind) {
    case K::A: return "A" + std::to_string(t.n);
    case K::D: return "D" + std::to_string(t.n);
    case K::E6: return "E6";
    case K::E7: return "E7";
    case K::E8: return "E8";
    case K::AffineA: return "AffineA" + std::to_string(t.n);
    case K::AffineD: return "AffineD" + std::to_string(t.n);
    case K::AffineE6: return "AffineE6";
    case K::AffineE7: return "AffineE7";
    case K::AffineE8: return "AffineE8";
    case K::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// Shape-only recognition of a connected simply-laced graph.
DynkinType shape_type(const GramGraph& g) {
  using K = DynkinType::Kind;
  const std::size_t n = g.size();
  const std::size_t m = g.edges().size();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.neighbors(v).size();
    max_deg = std::max(max_deg, deg[v]);
  }
  if (m == n) {
    if (n >= 3 && max_deg == 2) return {K::AffineA, n - 1};
    return {};
  }
  if (m + 1 != n) return {};
  if (max_deg <= 2) return {K::A, n};

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] >= 3) branch.push_back(v);
  }
  if (max_deg == 4) {
    if (n == 5) return {K::AffineD, 4};
    return {};
  }
  if (max_deg > 4) return {};

  auto arm_length = [&](std::size_t from, std::size_t first) {
    std::size_t len = 1, prev = from, cur = first;
    while (deg[cur] == 2) {
      const auto& nb = g.neighbors(cur);
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    return deg[cur] == 1 ? len : std::size_t{0};  // 0: arm ends at another branch vertex
  };

  if (branch.size() == 1) {
    std::vector<std::size_t> arms;
    for (auto nb : g.neighbors(branch[0])) arms.push_back(arm_length(branch[0], nb));
    std::sort(arms.begin(), arms.end());
    const auto a = arms[0], b = arms[1], c = arms[2];
    if (a == 1 && b == 1) return {K::D, n};
    if (a == 1 && b == 2 && c == 2) return {K::E6, 6};
    if (a == 1 && b == 2 && c == 3) return {K::E7, 7};
    if (a == 1 && b == 2 && c == 4) return {K::E8, 8};
    if (a == 2 && b == 2 && c == 2) return {K::AffineE6, 6};
    if (a == 1 && b == 3 && c == 3) return {K::AffineE7, 7};
    if (a == 1 && b == 2 && c == 5) return {K::AffineE8, 8};
    return {};
  }
  if (branch.size() == 2) {
    for (auto v : branch) {
      std::size_t leaves = 0;
      for (auto nb : g.neighbors(v)) {
        if (deg[nb] == 1) ++leaves;
      }
      if (leaves != 2) return {};
    }
    return {K::AffineD, n - 1};
  }
  return {};
}

}  // namespace

DynkinType dynkin_type(const VectorFamily& family, const Subset& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "Dynkin type of an empty subset");
  const GramGraph g = build_gram_graph(family, subset);
  if (!is_connected(g)) throw Error(Errc::DisconnectedSubset, "Dynkin recognition needs a connected subset");
  for (const auto& v : g.vertices()) {
    if (v.weight != 2) return {};
  }
  for (const auto& e : g.edges()) {
    if (e.weight != 1) return {};
  }
  const DynkinType shape = shape_type(g);
  if (shape.kind == DynkinType::Kind::Unknown) return shape;
  const auto cls = classify_subset(family, subset).kind;
  if (shape.is_finite() && cls == SubsetClass::Kind::Elliptic) return shape;
  if (shape.is_affine() && cls == SubsetClass::Kind::ConnectedParabolic) return shape;
  return {};
}

}  // namespace diagram
