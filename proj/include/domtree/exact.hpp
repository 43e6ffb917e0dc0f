#pragma once

#include <cstddef>

#include "domtree/graph.hpp"
#include "domtree/outcome.hpp"
#include "domtree/set_cover.hpp"
#include "domtree/solution.hpp"

namespace domtree {

// Exhaustive solvers for desk-scale ground truth. Each enforces a size
// guard and fails loudly (GuardExceeded) instead of running forever.
// Enumeration is by subset size, then lexicographic order, and only a
// strict improvement replaces the incumbent, so identical inputs yield
// identical solutions, not just identical values.

inline constexpr std::size_t kDefaultSubsetGuard = 20;
inline constexpr std::size_t kDefaultPathGuard = 14;
inline constexpr std::size_t kDefaultHamiltonianGuard = 12;
inline constexpr std::size_t kDefaultSetCoverGuard = 22;

/// Minimum finite-weight dominating tree: enumerate vertex subsets,
/// keep those that are connected-induced and dominating, and take the
/// induced MST of each.
SolveOutcome<SubgraphSolution> exact_mdt(const WeightedGraph& g,
                                         std::size_t guard = kDefaultSubsetGuard);

/// Minimum finite-weight tree whose vertex set intersects every group.
SolveOutcome<SubgraphSolution> exact_gst(const WeightedGraph& g,
                                         const GroupFamily& groups,
                                         std::size_t guard = kDefaultSubsetGuard);

/// Minimum finite-weight dominating star over every center and every
/// finite-weight leaf subset. Singleton stars are allowed.
SolveOutcome<SubgraphSolution> exact_mds(const WeightedGraph& g,
                                         std::size_t guard = kDefaultSubsetGuard);

/// As exact_mds but restricted to stars centered at the given vertex.
SolveOutcome<SubgraphSolution> exact_mds_centered(const WeightedGraph& g, Vertex center,
                                                  std::size_t guard = kDefaultSubsetGuard);

/// Minimum finite-weight dominating simple path, by DFS enumeration of
/// simple paths canonicalized so each path is visited once (singletons
/// first, then start below end).
SolveOutcome<SubgraphSolution> exact_mdp(const WeightedGraph& g,
                                         std::size_t guard = kDefaultPathGuard);

/// Minimum-weight sub-collection covering the universe; infeasible iff
/// some element is in no set. The guard bounds the number of sets.
SolveOutcome<CoverSelection> exact_set_cover(const SetCoverInstance& inst,
                                             std::size_t guard = kDefaultSetCoverGuard);

/// Minimum-cardinality dominating set; weights are ignored. Always
/// feasible (the full vertex set dominates).
VertexSet exact_dominating_set(const WeightedGraph& g,
                               std::size_t guard = kDefaultSubsetGuard);

/// True iff a simple path visiting every vertex exists; weights are
/// ignored.
bool has_hamiltonian_path(const WeightedGraph& g,
                          std::size_t guard = kDefaultHamiltonianGuard);

}  // namespace domtree
