#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domtree/graph.hpp"
#include "domtree/reductions.hpp"
#include "domtree/set_cover.hpp"
#include "domtree/solution.hpp"

namespace domtree {

// One text format with a kind header serves every problem, since
// reductions emit instances of other kinds. Line grammar:
//
//   p <kind> <n> <m> <scale>
//   e <u> <v> <w>          one per edge; w is unit count or "inf"
//   g <v1> <v2> ...        per group (gst only)
//   s <w> <e1> <e2> ...    per set (sc only; n is the universe size)
//
// Weights travel as non-negative decimal unit counts at the declared
// fixed-point scale, or the literal token "inf"; nothing on the wire is
// floating point. parse(serialize(x)) == x for every valid instance.

enum class ProblemKind { mdt, gst, mds, mdp, dom, hp, sc };

std::string to_string(ProblemKind kind);
bool problem_kind_from(const std::string& token, ProblemKind& out);

struct Instance {
  ProblemKind kind = ProblemKind::mdt;
  std::int64_t scale = 1;
  WeightedGraph graph;     // all kinds except sc
  GroupFamily groups;      // gst
  SetCoverInstance sets;   // sc

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ParseError with a line number and a distinct diagnostic for
/// negative weights, self-loops, duplicate edges, out-of-range indices
/// and unknown kinds.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Solution files:
//
//   sol <tree|star|path|set|cover> <weight>
//   v <v1> <v2> ...        vertices (tree/star/path/set)
//   e <u> <v>              one per edge (tree/star/path)
//   c <i1> <i2> ...        chosen set indices (cover)
//
// For "set" solutions the weight field is the cardinality.

struct SolutionFile {
  enum class Kind { tree, star, path, vertex_set, cover };

  Kind kind = Kind::tree;
  ExtWeight weight;
  VertexSet vertices;
  std::vector<Edge> edges;
  CoverSelection cover;

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

std::string to_string(SolutionFile::Kind kind);

SolutionFile parse_solution(const std::string& text);
std::string serialize_solution(const SolutionFile& sol);

SolutionFile solution_file_of(const SubgraphSolution& s);
/// The solution kind must be tree, star or path.
SubgraphSolution subgraph_solution_of(const SolutionFile& sol);

// Reduction sidecars record the correspondence between output entities
// and source entities, enough to lift solutions by index arithmetic:
//
//   r <from> <to> identity
//   v <out_vertex> <tag> <src_index>    graph outputs
//   c <center_vertex>                   mds->sc only
//   u <element> <src_vertex>            mds->sc only
//   s <set_index> <leaf_vertex>         mds->sc only
//   g <group_index> <src_vertex>        mdt->gst only
//
// with tags orig, group, lcopy, rcopy, center, pendant.

struct Sidecar {
  ProblemKind from = ProblemKind::mdt;
  ProblemKind to = ProblemKind::gst;
  std::string scale_note = "identity";
  std::vector<VertexOrigin> vertex_map;   // graph outputs
  std::vector<int> group_map;             // mdt->gst: group -> vertex
  Vertex center = -1;                     // mds->sc
  std::vector<Vertex> element_to_vertex;  // mds->sc
  std::vector<Vertex> set_to_leaf;        // mds->sc

  friend bool operator==(const Sidecar&, const Sidecar&) = default;
};

Sidecar parse_sidecar(const std::string& text);
std::string serialize_sidecar(const Sidecar& sc);

Sidecar sidecar_of(const MdtToGstArtifact& art);
Sidecar sidecar_of(const GstToMdtArtifact& art);
Sidecar sidecar_of(const DomToMdsArtifact& art);
Sidecar sidecar_of(const MdsToScArtifact& art);
Sidecar sidecar_of(const HpToMdpArtifact& art);

/// Lifts a reduced-instance solution back to the source instance by
/// index arithmetic alone. Throws std::invalid_argument when the
/// solution does not fit the sidecar (wrong solution kind, gadget
/// vertices in an identity lift, unknown set index).
SolutionFile lift_via_sidecar(const Sidecar& sc, const SolutionFile& sol);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace domtree
