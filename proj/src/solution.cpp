#include "domtree/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace domtree {

std::string to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::tree: return "tree";
    case SolutionKind::star: return "star";
    case SolutionKind::path: return "path";
  }
  return "?";
}

std::string to_string(Problem problem) {
  switch (problem) {
    case Problem::mdt: return "mdt";
    case Problem::mds: return "mds";
    case Problem::mdp: return "mdp";
  }
  return "?";
}

SubgraphSolution make_solution(const WeightedGraph& g, SolutionKind kind,
                               VertexSet vertices, std::vector<Edge> edges) {
  vertices = normalize_vertex_set(std::move(vertices));
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  ExtWeight total;
  for (const Edge& e : edges) {
    if (!vertex_set_contains(vertices, e.u) || !vertex_set_contains(vertices, e.v))
      throw std::invalid_argument("solution edge endpoint not in vertex set");
    auto w = g.weight(e.u, e.v);
    if (!w) throw std::invalid_argument("solution edge not present in host graph");
    total += *w;
  }
  return SubgraphSolution{kind, std::move(vertices), std::move(edges), total};
}

namespace {

// Union-find over the vertices of u, indexed by position.
class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

SubgraphSolution mst_induced(const WeightedGraph& g, const VertexSet& u) {
  if (!is_connected_induced(g, u))
    throw std::invalid_argument("mst_induced: induced subgraph is not connected");

  std::map<Vertex, size_t> index;
  for (size_t i = 0; i < u.size(); ++i) index[u[i]] = i;

  std::vector<WeightedEdge> pool;
  for (Vertex v : u)
    for (const auto& nb : g.neighbors(v))
      if (v < nb.to && index.count(nb.to)) pool.push_back(WeightedEdge{v, nb.to, nb.w});
  std::stable_sort(pool.begin(), pool.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     if (a.w != b.w) return a.w < b.w;
                     if (a.u != b.u) return a.u < b.u;
                     return a.v < b.v;
                   });

  DisjointSets dsu(u.size());
  std::vector<Edge> chosen;
  ExtWeight total;
  for (const WeightedEdge& e : pool) {
    if (dsu.unite(index[e.u], index[e.v])) {
      chosen.push_back(Edge{e.u, e.v});
      total += e.w;
      if (chosen.size() + 1 == u.size()) break;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return SubgraphSolution{SolutionKind::tree, u, std::move(chosen), total};
}

namespace {

ValidationReport failure(ValidationStatus status, std::string detail) {
  return ValidationReport{status, std::move(detail)};
}

// Connectivity of (U, F) itself, via the solution's own edges.
bool solution_connected(const SubgraphSolution& s) {
  if (s.vertices.empty()) return false;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : s.vertices) adj[v];
  for (const Edge& e : s.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> stack{s.vertices.front()};
  VertexSet seen{s.vertices.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!vertex_set_contains(seen, w)) {
        seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == s.vertices.size();
}

}  // namespace

ValidationReport check_structure(const WeightedGraph& g, const SubgraphSolution& s) {
  if (s.vertices.empty())
    return failure(ValidationStatus::structure_error, "solution has no vertices");
  if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
      std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
    return failure(ValidationStatus::structure_error, "vertex list not sorted/unique");
  for (Vertex v : s.vertices)
    if (v < 0 || v >= g.vertex_count())
      return failure(ValidationStatus::structure_error,
                     "vertex " + std::to_string(v) + " outside host graph");

  ExtWeight total;
  for (size_t i = 0; i < s.edges.size(); ++i) {
    const Edge& e = s.edges[i];
    if (e.u >= e.v)
      return failure(ValidationStatus::structure_error, "edge list not normalized");
    if (i > 0 && !(s.edges[i - 1] < e))
      return failure(ValidationStatus::structure_error, "edge list not sorted/unique");
    if (!vertex_set_contains(s.vertices, e.u) || !vertex_set_contains(s.vertices, e.v))
      return failure(ValidationStatus::structure_error,
                     "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside the vertex set");
    auto w = g.weight(e.u, e.v);
    if (!w)
      return failure(ValidationStatus::structure_error,
                     "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge of the host graph");
    total += *w;
  }
  if (total != s.weight)
    return failure(ValidationStatus::structure_error,
                   "declared weight " + s.weight.to_string() +
                       " does not match recomputed " + total.to_string());

  // Tree invariant: connected and acyclic, |F| = |U| - 1.
  if (s.edges.size() + 1 != s.vertices.size())
    return failure(ValidationStatus::kind_violation,
                   "edge count does not match a tree on the vertex set");
  if (!solution_connected(s))
    return failure(ValidationStatus::kind_violation, "solution edges do not connect it");

  if (s.kind == SolutionKind::star && s.vertices.size() > 2) {
    // Diameter at most 2: some vertex is an endpoint of every edge.
    bool centered = false;
    for (Vertex c : s.vertices) {
      bool all = true;
      for (const Edge& e : s.edges)
        if (e.u != c && e.v != c) {
          all = false;
          break;
        }
      if (all) {
        centered = true;
        break;
      }
    }
    if (!centered)
      return failure(ValidationStatus::kind_violation, "tree has diameter above 2");
  }
  if (s.kind == SolutionKind::path) {
    std::map<Vertex, int> deg;
    for (const Edge& e : s.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (const auto& [v, d] : deg)
      if (d > 2)
        return failure(ValidationStatus::kind_violation,
                       "vertex " + std::to_string(v) + " has degree above 2");
  }
  return ValidationReport{};
}

namespace {

bool kind_allowed(SolutionKind kind, Problem problem) {
  switch (problem) {
    case Problem::mdt: return true;  // stars and paths are trees
    case Problem::mds: return kind == SolutionKind::star;
    case Problem::mdp: return kind == SolutionKind::path;
  }
  return false;
}

}  // namespace

ValidationReport validate_solution_report(const WeightedGraph& g,
                                          const SubgraphSolution& s, Problem problem) {
  if (!kind_allowed(s.kind, problem))
    return failure(ValidationStatus::kind_violation,
                   to_string(problem) + " does not accept a " + to_string(s.kind));
  ValidationReport structure = check_structure(g, s);
  if (!structure.ok()) return structure;
  std::vector<char> in_u(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : s.vertices) in_u[static_cast<size_t>(v)] = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_u[static_cast<size_t>(v)]) continue;
    bool covered = false;
    for (const auto& nb : g.neighbors(v))
      if (in_u[static_cast<size_t>(nb.to)]) {
        covered = true;
        break;
      }
    if (!covered)
      return failure(ValidationStatus::infeasible,
                     "vertex " + std::to_string(v) + " is not dominated");
  }
  return ValidationReport{};
}

bool validate_solution(const WeightedGraph& g, const SubgraphSolution& s,
                       Problem problem) {
  return validate_solution_report(g, s, problem).ok();
}

ValidationReport validate_gst_report(const WeightedGraph& g, const GroupFamily& groups,
                                     const SubgraphSolution& s) {
  ValidationReport structure = check_structure(g, s);
  if (!structure.ok()) return structure;
  for (int i = 0; i < groups.size(); ++i) {
    bool hit = false;
    for (Vertex v : groups.group(i))
      if (vertex_set_contains(s.vertices, v)) {
        hit = true;
        break;
      }
    if (!hit)
      return failure(ValidationStatus::infeasible,
                     "group " + std::to_string(i) + " is not hit");
  }
  return ValidationReport{};
}

bool validate_gst(const WeightedGraph& g, const GroupFamily& groups,
                  const SubgraphSolution& s) {
  return validate_gst_report(g, groups, s).ok();
}

}  // namespace domtree
