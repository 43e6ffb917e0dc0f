#include "domtree/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domtree {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void ensure(bool condition, const std::string& message) {
  if (!condition) throw std::logic_error("lift postcondition violated: " + message);
}

}  // namespace

std::string to_string(GadgetTag tag) {
  switch (tag) {
    case GadgetTag::orig: return "orig";
    case GadgetTag::group: return "group";
    case GadgetTag::lcopy: return "lcopy";
    case GadgetTag::rcopy: return "rcopy";
    case GadgetTag::center: return "center";
    case GadgetTag::pendant: return "pendant";
  }
  return "?";
}

MdtToGstArtifact reduce_mdt_to_gst(const WeightedGraph& g) {
  require(g.vertex_count() >= 1, "reduce_mdt_to_gst: graph has no vertices");
  MdtToGstArtifact art;
  art.source = g;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    art.groups.add_group(closed_neighborhood(g, v));
    art.vertex_map.push_back(VertexOrigin{GadgetTag::orig, v});
  }
  return art;
}

SubgraphSolution lift_gst_to_mdt_solution(const MdtToGstArtifact& art,
                                          const SubgraphSolution& s) {
  ValidationReport in = validate_gst_report(art.source, art.groups, s);
  require(in.ok(), "lift_gst_to_mdt_solution: input is not a feasible group "
                   "Steiner tree: " + in.detail);
  SubgraphSolution lifted = s;
  lifted.kind = SolutionKind::tree;
  ensure(validate_solution(art.source, lifted, Problem::mdt),
         "lifted tree does not dominate the source");
  return lifted;
}

SubgraphSolution embed_mdt_solution_in_gst(const MdtToGstArtifact& art,
                                           const SubgraphSolution& s) {
  require(validate_solution(art.source, s, Problem::mdt),
          "embed_mdt_solution_in_gst: input is not a dominating tree");
  ensure(validate_gst(art.source, art.groups, s),
         "dominating tree does not hit every closed-neighborhood group");
  return s;
}

GstToMdtArtifact reduce_gst_to_mdt(const WeightedGraph& g, const GroupFamily& groups) {
  require(g.vertex_count() >= 1, "reduce_gst_to_mdt: graph has no vertices");
  require(!groups.empty(), "reduce_gst_to_mdt: group family is empty");
  require(groups_valid(g, groups), "reduce_gst_to_mdt: group member outside graph");

  const int n = g.vertex_count();
  GstToMdtArtifact art;
  art.source = g;
  art.source_groups = groups;
  art.output = WeightedGraph(n + groups.size());
  for (const WeightedEdge& e : g.edges()) art.output.add_edge(e.u, e.v, e.w);
  // Complete the original vertices through infinite filler edges.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) art.output.add_edge(u, v, ExtWeight::infinity());
  // One gadget vertex per group, wired to its members. Gadget vertices
  // stay mutually non-adjacent.
  for (int i = 0; i < groups.size(); ++i)
    for (Vertex v : groups.group(i))
      art.output.add_edge(n + i, v, ExtWeight::infinity());

  for (Vertex v = 0; v < n; ++v)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::orig, v});
  for (int i = 0; i < groups.size(); ++i)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::group, i});
  return art;
}

SubgraphSolution lift_mdt_to_gst_solution(const GstToMdtArtifact& art,
                                          const SubgraphSolution& s) {
  require(validate_solution(art.output, s, Problem::mdt),
          "lift_mdt_to_gst_solution: input is not a dominating tree of the "
          "reduced graph");
  require(s.weight.is_finite(), "lift_mdt_to_gst_solution: input has infinite weight");
  const int n = art.source.vertex_count();
  for (Vertex v : s.vertices)
    require(v < n, "lift_mdt_to_gst_solution: solution touches gadget vertex " +
                       std::to_string(v));
  for (const Edge& e : s.edges)
    ensure(art.source.has_edge(e.u, e.v), "finite tree uses a non-source edge");
  SubgraphSolution lifted = make_solution(art.source, SolutionKind::tree, s.vertices,
                                          s.edges);
  ensure(lifted.weight == s.weight, "lift changed the solution weight");
  ensure(validate_gst(art.source, art.source_groups, lifted),
         "lifted tree misses a group");
  return lifted;
}

SubgraphSolution embed_gst_solution_in_mdt(const GstToMdtArtifact& art,
                                           const SubgraphSolution& s) {
  require(validate_gst(art.source, art.source_groups, s),
          "embed_gst_solution_in_mdt: input is not a feasible group Steiner tree");
  SubgraphSolution embedded = make_solution(art.output, SolutionKind::tree, s.vertices,
                                            s.edges);
  ensure(embedded.weight == s.weight, "embedding changed the solution weight");
  ensure(validate_solution(art.output, embedded, Problem::mdt),
         "embedded tree does not dominate the reduced graph");
  return embedded;
}

DomToMdsArtifact reduce_dom_to_mds(const WeightedGraph& g) {
  require(g.vertex_count() >= 1, "reduce_dom_to_mds: graph has no vertices");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    require(g.degree(v) > 0,
            "reduce_dom_to_mds: vertex " + std::to_string(v) +
                " is isolated; the construction needs minimum degree 1");

  const int n = g.vertex_count();
  DomToMdsArtifact art;
  art.source = g;
  art.hub = 2 * n;
  art.output = WeightedGraph(2 * n + 1);
  // Cross edges between copies carry the source adjacency; the copy
  // edge (v_l, v_r) lets a chosen vertex answer for its own right copy.
  for (const WeightedEdge& e : g.edges()) {
    art.output.add_edge(e.u, n + e.v, ExtWeight::infinity());
    art.output.add_edge(e.v, n + e.u, ExtWeight::infinity());
  }
  for (Vertex v = 0; v < n; ++v) art.output.add_edge(v, n + v, ExtWeight::infinity());
  for (Vertex v = 0; v < n; ++v) art.output.add_edge(art.hub, v, ExtWeight::finite(1));

  for (Vertex v = 0; v < n; ++v)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::lcopy, v});
  for (Vertex v = 0; v < n; ++v)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::rcopy, v});
  art.vertex_map.push_back(VertexOrigin{GadgetTag::center, 0});
  return art;
}

VertexSet lift_mds_to_dom_solution(const DomToMdsArtifact& art,
                                   const SubgraphSolution& s) {
  require(validate_solution(art.output, s, Problem::mds),
          "lift_mds_to_dom_solution: input is not a dominating star of the "
          "reduced graph");
  require(s.weight.is_finite(), "lift_mds_to_dom_solution: input has infinite weight");
  const int n = art.source.vertex_count();
  VertexSet dom;
  for (Vertex v : s.vertices)
    if (v < n) dom.push_back(v);
  ensure(dominates(art.source, dom), "lifted set does not dominate the source");
  ensure(ExtWeight::finite(static_cast<std::int64_t>(dom.size())) == s.weight,
         "lifted set size differs from the star weight");
  return dom;
}

SubgraphSolution star_from_dominating_set(const DomToMdsArtifact& art,
                                          const VertexSet& dom) {
  require(dominates(art.source, dom),
          "star_from_dominating_set: input does not dominate the source");
  require(!dom.empty(), "star_from_dominating_set: empty dominating set");
  VertexSet vertices = dom;
  vertices.push_back(art.hub);
  std::vector<Edge> edges;
  for (Vertex v : dom) edges.push_back(make_edge(art.hub, v));
  SubgraphSolution star =
      make_solution(art.output, SolutionKind::star, std::move(vertices), std::move(edges));
  ensure(validate_solution(art.output, star, Problem::mds),
         "star over the dominating set does not dominate the reduced graph");
  ensure(star.weight == ExtWeight::finite(static_cast<std::int64_t>(dom.size())),
         "star weight differs from the set size");
  return star;
}

MdsToScArtifact reduce_mds_to_sc(const WeightedGraph& g, Vertex center) {
  require(g.vertex_count() >= 1, "reduce_mds_to_sc: graph has no vertices");
  if (center < 0 || center >= g.vertex_count())
    throw std::out_of_range("reduce_mds_to_sc: invalid center " +
                            std::to_string(center));

  MdsToScArtifact art;
  art.source = g;
  art.center = center;

  const VertexSet closed = closed_neighborhood(g, center);
  std::vector<int> element_index(static_cast<size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (vertex_set_contains(closed, v)) continue;
    element_index[static_cast<size_t>(v)] = static_cast<int>(art.element_to_vertex.size());
    art.element_to_vertex.push_back(v);
  }
  art.output = SetCoverInstance(static_cast<int>(art.element_to_vertex.size()));
  for (const auto& nb : g.neighbors(center)) {
    if (nb.w.is_infinite()) continue;  // infinite edges cannot be star leaves
    VertexSet covered;
    for (const auto& nb2 : g.neighbors(nb.to)) {
      int e = element_index[static_cast<size_t>(nb2.to)];
      if (e >= 0) covered.push_back(e);
    }
    art.output.add_set(std::move(covered), nb.w);
    art.set_to_leaf.push_back(nb.to);
  }
  return art;
}

SubgraphSolution lift_sc_to_mds_solution(const MdsToScArtifact& art,
                                         const CoverSelection& cover) {
  CoverReport in = validate_cover(art.output, cover);
  require(in.ok, "lift_sc_to_mds_solution: input is not a feasible cover: " + in.detail);
  VertexSet vertices{art.center};
  std::vector<Edge> edges;
  for (int i : cover) {
    Vertex leaf = art.set_to_leaf.at(static_cast<size_t>(i));
    vertices.push_back(leaf);
    edges.push_back(make_edge(art.center, leaf));
  }
  SubgraphSolution star =
      make_solution(art.source, SolutionKind::star, std::move(vertices), std::move(edges));
  ensure(star.weight == in.weight, "star weight differs from the cover weight");
  ensure(validate_solution(art.source, star, Problem::mds),
         "lifted star does not dominate the source");
  return star;
}

CoverSelection cover_from_star(const MdsToScArtifact& art, const SubgraphSolution& s) {
  require(validate_solution(art.source, s, Problem::mds),
          "cover_from_star: input is not a dominating star");
  require(vertex_set_contains(s.vertices, art.center),
          "cover_from_star: star does not contain the recorded center");
  for (const Edge& e : s.edges)
    require(e.u == art.center || e.v == art.center,
            "cover_from_star: star is not centered at the recorded center");

  std::vector<int> set_of_leaf(static_cast<size_t>(art.source.vertex_count()), -1);
  for (size_t i = 0; i < art.set_to_leaf.size(); ++i)
    set_of_leaf[static_cast<size_t>(art.set_to_leaf[i])] = static_cast<int>(i);

  CoverSelection cover;
  ExtWeight total;
  for (const Edge& e : s.edges) {
    Vertex leaf = e.u == art.center ? e.v : e.u;
    int idx = set_of_leaf[static_cast<size_t>(leaf)];
    ensure(idx >= 0, "star leaf has no corresponding set");
    cover.push_back(idx);
    total += art.output.set(idx).weight;
  }
  std::sort(cover.begin(), cover.end());
  CoverReport report = validate_cover(art.output, cover);
  ensure(report.ok, "cover from star leaves an element uncovered: " + report.detail);
  ensure(total == s.weight, "cover weight differs from the star weight");
  return cover;
}

HpToMdpArtifact reduce_hp_to_mdp(const WeightedGraph& g) {
  require(g.vertex_count() >= 1, "reduce_hp_to_mdp: graph has no vertices");
  const int n = g.vertex_count();
  HpToMdpArtifact art;
  art.source = g;
  art.output = WeightedGraph(2 * n);
  for (const WeightedEdge& e : g.edges())
    art.output.add_edge(e.u, e.v, ExtWeight::zero());
  for (Vertex v = 0; v < n; ++v) art.output.add_edge(v, n + v, ExtWeight::infinity());
  for (Vertex v = 0; v < n; ++v)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::orig, v});
  for (Vertex v = 0; v < n; ++v)
    art.vertex_map.push_back(VertexOrigin{GadgetTag::pendant, v});
  return art;
}

bool decide_hp_via_mdp(const HpToMdpArtifact& art,
                       const SolveOutcome<SubgraphSolution>& outcome) {
  if (!outcome.is_feasible() || outcome.weight() != ExtWeight::zero()) return false;
  const int n = art.source.vertex_count();
  const SubgraphSolution& p = outcome.solution();
  ensure(static_cast<int>(p.vertices.size()) == n, "zero-weight path is not spanning");
  for (Vertex v : p.vertices)
    ensure(v < n, "zero-weight path touches a pendant vertex");
  return true;
}

SubgraphSolution embed_hp_path_in_mdp(const HpToMdpArtifact& art,
                                      const std::vector<Vertex>& path_order) {
  const int n = art.source.vertex_count();
  require(static_cast<int>(path_order.size()) == n,
          "embed_hp_path_in_mdp: path does not span the source");
  std::vector<Edge> edges;
  for (size_t i = 1; i < path_order.size(); ++i) {
    require(art.source.has_edge(path_order[i - 1], path_order[i]),
            "embed_hp_path_in_mdp: consecutive vertices are not adjacent");
    edges.push_back(make_edge(path_order[i - 1], path_order[i]));
  }
  SubgraphSolution path =
      make_solution(art.output, SolutionKind::path,
                    VertexSet(path_order.begin(), path_order.end()), std::move(edges));
  ensure(path.weight == ExtWeight::zero(), "embedded path has nonzero weight");
  ensure(validate_solution(art.output, path, Problem::mdp),
         "embedded path does not dominate the reduced graph");
  return path;
}

}  // namespace domtree
