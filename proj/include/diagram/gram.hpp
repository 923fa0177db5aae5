#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diagram/lattice.hpp"

namespace diagram {

using Label = std::string;

/// Sorted member indices of a VectorFamily.
using Subset = std::vector<std::size_t>;

/// Labeled negative-square vectors on one lattice, no two positively proportional.
/// Member order is the insertion order and is the canonical order for every report.
class VectorFamily {
 public:
  /// Throws NonNegativeSquareMember, ProportionalMembers, DuplicateLabel, MismatchedLattice.
  VectorFamily(LatticePtr lattice, std::vector<std::pair<Label, LatticeVector>> members);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Label& label(std::size_t i) const { return members_.at(i).first; }
  const LatticeVector& vector(std::size_t i) const { return members_.at(i).second; }
  const std::vector<std::pair<Label, LatticeVector>>& members() const noexcept { return members_; }

  /// Throws UnknownLabel.
  std::size_t index_of(const Label& label) const;
  /// Sorted, deduplicated indices. Throws UnknownLabel.
  Subset indices_of(std::span<const Label> labels) const;
  std::vector<Label> labels_of(const Subset& subset) const;

  const Matrix& gram() const noexcept { return gram_; }
  const Rational& product(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  /// All pairwise products nonnegative.
  bool is_acute() const;

 private:
  LatticePtr lattice_;
  std::vector<std::pair<Label, LatticeVector>> members_;
  Matrix gram_;
};

/// Weighted Gram graph: vertex weight -δ², edge {i,j} with weight δᵢ·δⱼ iff nonzero.
class GramGraph {
 public:
  struct Vertex {
    Label label;
    Rational weight;
  };
  struct Edge {
    std::size_t u;
    std::size_t v;
    Rational weight;
  };

  GramGraph() = default;
  /// Throws UnknownVertex for out-of-range endpoints and rejects self-loops.
  GramGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// Throws UnknownVertex.
  std::size_t index_of(const Label& label) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

GramGraph build_gram_graph(const VectorFamily& family);
/// Induced graph on a subset; vertex i of the result is subset[i].
GramGraph build_gram_graph(const VectorFamily& family, const Subset& subset);

/// Hop count; nullopt means the endpoints lie in different components.
using Distance = std::optional<std::size_t>;

std::string to_string(const Distance& d);

Distance graph_distance(const GramGraph& g, std::size_t u, std::size_t v);
Distance graph_distance(const GramGraph& g, const Label& u, const Label& v);

/// min over paths s of (length(s) − #(s ∩ Q)); endpoints must lie outside Q.
/// Throws EndpointInQ / UnknownVertex.
Distance rho_q(const GramGraph& g, const std::vector<bool>& in_q, std::size_t u, std::size_t v);
Distance rho_q(const GramGraph& g, std::span<const Label> q, const Label& u, const Label& v);

/// Max pairwise distance, nullopt when disconnected. Throws EmptyGraph.
Distance diameter(const GramGraph& g);

bool is_connected(const GramGraph& g);
std::vector<std::vector<std::size_t>> connected_components(const GramGraph& g);

struct SubsetClass {
  enum class Kind { Elliptic, ConnectedParabolic, NonHyperbolicMixed, Hyperbolic };
  Kind kind = Kind::Elliptic;
  bool is_lanner = false;

  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
};

std::string_view to_string(SubsetClass::Kind kind);

/// Positive index of the subset's Gram matrix is at least one. Throws NotHyperbolicAmbient
/// when it exceeds one, which cannot happen inside a hyperbolic lattice.
bool is_hyperbolic_subset(const VectorFamily& family, const Subset& subset);
bool is_elliptic_subset(const VectorFamily& family, const Subset& subset);

SubsetClass classify_subset(const VectorFamily& family, const Subset& subset);
/// Throws EmptySubset / UnknownLabel.
SubsetClass classify_subset(const VectorFamily& family, std::span<const Label> labels);

/// Minimal hyperbolic subsets of size <= max_size, ordered by size then lexicographically.
std::vector<Subset> enumerate_lanner(const VectorFamily& family, std::size_t max_size);

struct DynkinType {
  enum class Kind { A, D, E6, E7, E8, AffineA, AffineD, AffineE6, AffineE7, AffineE8, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t n = 0;  // subscript; 6/7/8 for the E series

  bool is_finite() const noexcept { return kind == Kind::A || kind == Kind::D || kind == Kind::E6 || kind == Kind::E7 || kind == Kind::E8; }
  bool is_affine() const noexcept { return kind != Kind::Unknown && !is_finite(); }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);

/// Simply-laced recognition (vertex weights 2, edge weights 1). Throws DisconnectedSubset.
DynkinType dynkin_type(const VectorFamily& family, const Subset& subset);

}  // namespace diagram
