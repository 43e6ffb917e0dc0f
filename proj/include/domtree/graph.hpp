#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "domtree/ext_weight.hpp"

namespace domtree {

using Vertex = int;

/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order to u < v. Rejects self-loops.
Edge make_edge(Vertex a, Vertex b);

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  ExtWeight w;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with ExtWeight edge
/// weights. Build once with add_edge, then treat as immutable; const
/// operations are pure and safe to call concurrently.
class WeightedGraph {
 public:
  struct Neighbor {
    Vertex to = 0;
    ExtWeight w;
    friend bool operator==(const Neighbor&, const Neighbor&) = default;
  };

  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  /// Rejects self-loops, parallel edges and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v, ExtWeight w);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(Vertex u, Vertex v) const;
  std::optional<ExtWeight> weight(Vertex u, Vertex v) const;
  /// Neighbors of v in ascending vertex order.
  const std::vector<Neighbor>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  /// All edges sorted lexicographically by (u, v) with u < v.
  std::vector<WeightedEdge> edges() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Neighbor>> adj_;
};

/// Ordered list of non-empty vertex groups over a host graph.
class GroupFamily {
 public:
  GroupFamily() = default;

  /// Rejects empty groups; members are normalized to sorted order.
  void add_group(VertexSet group);

  int size() const { return static_cast<int>(groups_.size()); }
  bool empty() const { return groups_.empty(); }
  const VertexSet& group(int i) const { return groups_.at(static_cast<size_t>(i)); }
  auto begin() const { return groups_.begin(); }
  auto end() const { return groups_.end(); }

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;

 private:
  std::vector<VertexSet> groups_;
};

/// True iff every group member is a valid vertex of g.
bool groups_valid(const WeightedGraph& g, const GroupFamily& groups);

VertexSet normalize_vertex_set(VertexSet s);
bool vertex_set_contains(const VertexSet& s, Vertex v);

/// {v} plus all vertices sharing an edge with v; infinite-weight edges
/// count as adjacency.
VertexSet closed_neighborhood(const WeightedGraph& g, Vertex v);

/// True iff every vertex outside u has a neighbor in u. Adjacency via
/// any edge, including infinite-weight ones. An empty u dominates only
/// the empty graph.
bool dominates(const WeightedGraph& g, const VertexSet& u);

/// True iff the subgraph induced by u is connected. Empty u is an error.
bool is_connected_induced(const WeightedGraph& g, const VertexSet& u);

}  // namespace domtree
