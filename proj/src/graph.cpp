#include "domtree/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace domtree {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

WeightedGraph::WeightedGraph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

void WeightedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void WeightedGraph::add_edge(Vertex u, Vertex v, ExtWeight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edges are not allowed");
  auto insert = [this](Vertex a, Vertex b, ExtWeight weight) {
    auto& list = adj_[static_cast<size_t>(a)];
    auto pos = std::lower_bound(list.begin(), list.end(), b,
                                [](const Neighbor& nb, Vertex x) { return nb.to < x; });
    list.insert(pos, Neighbor{b, weight});
  };
  insert(u, v, w);
  insert(v, u, w);
  ++m_;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
  return weight(u, v).has_value();
}

std::optional<ExtWeight> WeightedGraph::weight(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return std::nullopt;
  const auto& list = adj_[static_cast<size_t>(u)];
  auto pos = std::lower_bound(list.begin(), list.end(), v,
                              [](const Neighbor& nb, Vertex x) { return nb.to < x; });
  if (pos != list.end() && pos->to == v) return pos->w;
  return std::nullopt;
}

const std::vector<WeightedGraph::Neighbor>& WeightedGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int WeightedGraph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (const Neighbor& nb : adj_[static_cast<size_t>(u)])
      if (u < nb.to) out.push_back(WeightedEdge{u, nb.to, nb.w});
  return out;
}

void GroupFamily::add_group(VertexSet group) {
  if (group.empty()) throw std::invalid_argument("groups must be non-empty");
  groups_.push_back(normalize_vertex_set(std::move(group)));
}

bool groups_valid(const WeightedGraph& g, const GroupFamily& groups) {
  for (const VertexSet& grp : groups)
    for (Vertex v : grp)
      if (v < 0 || v >= g.vertex_count()) return false;
  return true;
}

VertexSet normalize_vertex_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool vertex_set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet closed_neighborhood(const WeightedGraph& g, Vertex v) {
  VertexSet out;
  out.reserve(g.neighbors(v).size() + 1);
  bool placed = false;
  for (const auto& nb : g.neighbors(v)) {
    if (!placed && v < nb.to) {
      out.push_back(v);
      placed = true;
    }
    out.push_back(nb.to);
  }
  if (!placed) out.push_back(v);
  return out;
}

bool dominates(const WeightedGraph& g, const VertexSet& u) {
  std::vector<char> in_u(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : u) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    in_u[static_cast<size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_u[static_cast<size_t>(v)]) continue;
    bool covered = false;
    for (const auto& nb : g.neighbors(v)) {
      if (in_u[static_cast<size_t>(nb.to)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_connected_induced(const WeightedGraph& g, const VertexSet& u) {
  if (u.empty()) throw std::invalid_argument("is_connected_induced: empty vertex set");
  std::vector<char> in_u(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : u) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    in_u[static_cast<size_t>(v)] = 1;
  }
  std::vector<Vertex> stack{u.front()};
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(u.front())] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (in_u[static_cast<size_t>(nb.to)] && !seen[static_cast<size_t>(nb.to)]) {
        seen[static_cast<size_t>(nb.to)] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
    }
  }
  return reached == u.size();
}

}  // namespace domtree
