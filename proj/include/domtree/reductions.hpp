#pragma once

#include <string>
#include <vector>

#include "domtree/graph.hpp"
#include "domtree/outcome.hpp"
#include "domtree/set_cover.hpp"
#include "domtree/solution.hpp"

namespace domtree {

// Instance transformations between the six problems, each packaged with
// the correspondence maps that make solution lifting pure index
// arithmetic. All five reductions preserve weights identically, and
// every lift checks its feasibility postcondition: a std::logic_error
// from a lift means the correspondence itself was broken, while a
// std::invalid_argument flags an input that violates the lift's
// precondition.

/// Role of an output vertex relative to the source instance.
enum class GadgetTag { orig, group, lcopy, rcopy, center, pendant };

std::string to_string(GadgetTag tag);

struct VertexOrigin {
  GadgetTag tag = GadgetTag::orig;
  int source_index = 0;  // source vertex, or group index for GadgetTag::group
  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

/// Domination-as-group-hitting: same graph, one group per vertex
/// holding its closed neighborhood.
struct MdtToGstArtifact {
  WeightedGraph source;
  GroupFamily groups;                   // groups.group(v) == N[v]
  std::vector<VertexOrigin> vertex_map; // identity
  std::string scale_note = "identity";  // weight relation to the source
};

MdtToGstArtifact reduce_mdt_to_gst(const WeightedGraph& g);

/// Identity lift of a feasible group Steiner tree back to a dominating
/// tree of the source.
SubgraphSolution lift_gst_to_mdt_solution(const MdtToGstArtifact& art,
                                          const SubgraphSolution& s);

/// The reverse embedding: a dominating tree of the source is already a
/// feasible group Steiner tree for the reduced instance.
SubgraphSolution embed_mdt_solution_in_gst(const MdtToGstArtifact& art,
                                           const SubgraphSolution& s);

/// Group hitting as domination: original vertices become a clique
/// (missing pairs get infinite edges) and every group gains a gadget
/// vertex adjacent to its members through infinite edges. Original
/// vertices keep their indices; group i becomes vertex n + i.
struct GstToMdtArtifact {
  WeightedGraph source;
  GroupFamily source_groups;
  WeightedGraph output;
  std::vector<VertexOrigin> vertex_map;
  std::string scale_note = "identity";
};

GstToMdtArtifact reduce_gst_to_mdt(const WeightedGraph& g, const GroupFamily& groups);

/// Lifts a finite-weight dominating tree of the output back to a group
/// Steiner tree of the source. Rejects inputs of infinite weight or
/// touching gadget vertices (only the degenerate single-gadget star can
/// be both finite and gadget-touching, and it has no counterpart).
SubgraphSolution lift_mdt_to_gst_solution(const GstToMdtArtifact& art,
                                          const SubgraphSolution& s);

/// Identity embedding of a source group Steiner tree as a dominating
/// tree of the output.
SubgraphSolution embed_gst_solution_in_mdt(const GstToMdtArtifact& art,
                                           const SubgraphSolution& s);

/// Dominating set as dominating star. Output layout: left copy of v is
/// vertex v, right copy is n + v, the hub is 2n. Every source edge uv
/// yields infinite edges (u_l, v_r) and (v_l, u_r); each vertex also
/// gets the infinite copy edge (v_l, v_r); the hub reaches every left
/// copy at unit weight. Source weights are ignored.
struct DomToMdsArtifact {
  WeightedGraph source;
  WeightedGraph output;
  std::vector<VertexOrigin> vertex_map;
  Vertex hub = 0;
  std::string scale_note = "identity";
};

/// Rejects graphs with isolated vertices with an explicit diagnostic.
DomToMdsArtifact reduce_dom_to_mds(const WeightedGraph& g);

/// Lifts a finite-weight dominating star of the output to a dominating
/// set of the source: the left-copy members, hub excluded. Checks
/// domination and that the set's size equals the star's weight.
VertexSet lift_mds_to_dom_solution(const DomToMdsArtifact& art,
                                   const SubgraphSolution& s);

/// The reverse embedding: hub plus the left copies of a dominating set
/// form a dominating star of weight |D|.
SubgraphSolution star_from_dominating_set(const DomToMdsArtifact& art,
                                          const VertexSet& dom);

/// Dominating star (center fixed) as weighted set cover: the universe
/// is everything outside the center's closed neighborhood, and each
/// finite-weight neighbor v of the center contributes the set
/// N(v) ∩ universe at cost w(center, v).
struct MdsToScArtifact {
  WeightedGraph source;
  Vertex center = 0;
  SetCoverInstance output;
  std::vector<Vertex> element_to_vertex;  // universe element -> source vertex
  std::vector<Vertex> set_to_leaf;        // set index -> candidate leaf
  std::string scale_note = "identity";
};

MdsToScArtifact reduce_mds_to_sc(const WeightedGraph& g, Vertex center);

/// Lifts a feasible cover to the star on the recorded center whose
/// leaves are the covered sets' vertices; weights agree exactly.
SubgraphSolution lift_sc_to_mds_solution(const MdsToScArtifact& art,
                                         const CoverSelection& cover);

/// The reverse map: a dominating star centered at the artifact's center
/// yields a cover of equal weight.
CoverSelection cover_from_star(const MdsToScArtifact& art, const SubgraphSolution& s);

/// Hamiltonian path as zero-optimum dominating path: original edges get
/// weight zero and every vertex v gains a pendant copy (vertex n + v)
/// behind an infinite edge. Source weights are ignored.
struct HpToMdpArtifact {
  WeightedGraph source;
  WeightedGraph output;
  std::vector<VertexOrigin> vertex_map;
  std::string scale_note = "identity";
};

HpToMdpArtifact reduce_hp_to_mdp(const WeightedGraph& g);

/// True iff the outcome is feasible with weight exactly zero; such a
/// path is checked to span exactly the original vertices, i.e. it is a
/// Hamiltonian path witness.
bool decide_hp_via_mdp(const HpToMdpArtifact& art,
                       const SolveOutcome<SubgraphSolution>& outcome);

/// The reverse embedding for tests: a Hamiltonian path of the source is
/// a zero-weight dominating path of the output.
SubgraphSolution embed_hp_path_in_mdp(const HpToMdpArtifact& art,
                                      const std::vector<Vertex>& path_order);

}  // namespace domtree
