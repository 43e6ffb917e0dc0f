#pragma once

#include <string>
#include <vector>

#include "domtree/graph.hpp"

namespace domtree {

enum class SolutionKind { tree, star, path };

enum class Problem { mdt, mds, mdp };

std::string to_string(SolutionKind kind);
std::string to_string(Problem problem);

/// A subgraph (U, F) of a host graph claiming to be a tree, star or
/// path, together with its total edge weight. Vertices are sorted,
/// edges normalized (u < v) and sorted lexicographically.
struct SubgraphSolution {
  SolutionKind kind = SolutionKind::tree;
  VertexSet vertices;
  std::vector<Edge> edges;
  ExtWeight weight;

  friend bool operator==(const SubgraphSolution&, const SubgraphSolution&) = default;
};

/// Builds a normalized solution, computing the weight from g. Every
/// edge must exist in g and join two listed vertices.
SubgraphSolution make_solution(const WeightedGraph& g, SolutionKind kind,
                               VertexSet vertices, std::vector<Edge> edges);

/// Minimum-weight spanning tree of the subgraph induced by u.
/// Kruskal with ties broken by lexicographic edge (min endpoint, then
/// max endpoint), so the result is deterministic. The induced subgraph
/// must be connected; a singleton u yields the empty tree of weight 0.
SubgraphSolution mst_induced(const WeightedGraph& g, const VertexSet& u);

enum class ValidationStatus {
  valid,
  structure_error,  // edges missing from g, endpoints outside U, wrong weight
  kind_violation,   // (U, F) does not satisfy the claimed kind invariant
  infeasible,       // structurally fine but fails the problem's feasibility
};

struct ValidationReport {
  ValidationStatus status = ValidationStatus::valid;
  std::string detail;

  bool ok() const { return status == ValidationStatus::valid; }
};

/// Structural check only: edges exist in g, endpoints lie in U, the
/// weight field matches the recomputed sum, and (U, F) satisfies the
/// claimed kind invariant. Single vertices are valid trees, stars and
/// paths; a star is a tree of diameter at most 2; a path is a tree with
/// all degrees at most 2.
ValidationReport check_structure(const WeightedGraph& g, const SubgraphSolution& s);

/// Full check for a domination problem: structure, kind compatibility
/// (mdt accepts any of the three kinds, mds requires a star, mdp a
/// path) and domination of g by s.vertices.
ValidationReport validate_solution_report(const WeightedGraph& g,
                                          const SubgraphSolution& s, Problem problem);
bool validate_solution(const WeightedGraph& g, const SubgraphSolution& s,
                       Problem problem);

/// Full check for a group Steiner solution: structure plus "every group
/// intersects s.vertices".
ValidationReport validate_gst_report(const WeightedGraph& g, const GroupFamily& groups,
                                     const SubgraphSolution& s);
bool validate_gst(const WeightedGraph& g, const GroupFamily& groups,
                  const SubgraphSolution& s);

}  // namespace domtree
