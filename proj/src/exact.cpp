#include "domtree/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "domtree/detail/combinations.hpp"
#include "domtree/errors.hpp"

namespace domtree {

namespace {

using Mask = std::uint64_t;

void check_size(const WeightedGraph& g, std::size_t guard, const char* who) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument(std::string(who) + ": graph has no vertices");
  std::size_t limit = std::min<std::size_t>(guard, 64);
  if (static_cast<std::size_t>(g.vertex_count()) > limit)
    throw GuardExceeded(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                        " vertices exceed the size guard of " + std::to_string(limit));
}

std::vector<Mask> adjacency_masks(const WeightedGraph& g) {
  std::vector<Mask> adj(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const auto& nb : g.neighbors(v))
      adj[static_cast<size_t>(v)] |= Mask{1} << nb.to;
  return adj;
}

bool mask_dominates(const std::vector<Mask>& adj, int n, Mask u) {
  for (int v = 0; v < n; ++v)
    if (!((u >> v) & 1) && !(adj[static_cast<size_t>(v)] & u)) return false;
  return true;
}

bool mask_connected(const std::vector<Mask>& adj, Mask u) {
  if (u == 0) return false;
  Mask seen = u & (~u + 1);  // lowest set bit
  while (true) {
    Mask frontier = 0;
    Mask probe = seen;
    while (probe) {
      int v = std::countr_zero(probe);
      probe &= probe - 1;
      frontier |= adj[static_cast<size_t>(v)] & u;
    }
    Mask grown = seen | frontier;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == u;
}

Mask combo_mask(const std::vector<int>& combo) {
  Mask m = 0;
  for (int v : combo) m |= Mask{1} << v;
  return m;
}

VertexSet mask_to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Kruskal restricted to the vertices of `mask`, over a pre-sorted pool.
// Returns the spanning tree's weight and edges; the caller guarantees
// connectivity of the induced subgraph.
struct MaskMst {
  ExtWeight weight;
  std::vector<Edge> edges;
};

MaskMst mst_on_mask(const std::vector<WeightedEdge>& sorted_edges,
                    const std::vector<int>& vertex_index, Mask mask, int size) {
  std::vector<int> parent(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  MaskMst out;
  int picked = 0;
  for (const WeightedEdge& e : sorted_edges) {
    if (!((mask >> e.u) & 1) || !((mask >> e.v) & 1)) continue;
    int a = find(vertex_index[static_cast<size_t>(e.u)]);
    int b = find(vertex_index[static_cast<size_t>(e.v)]);
    if (a == b) continue;
    parent[static_cast<size_t>(a)] = b;
    out.edges.push_back(Edge{e.u, e.v});
    out.weight += e.w;
    if (++picked + 1 == size) break;
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<WeightedEdge> edges_sorted_by_weight(const WeightedGraph& g) {
  std::vector<WeightedEdge> pool = g.edges();
  std::stable_sort(pool.begin(), pool.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     if (a.w != b.w) return a.w < b.w;
                     if (a.u != b.u) return a.u < b.u;
                     return a.v < b.v;
                   });
  return pool;
}

// Shared enumeration driver for exact_mdt / exact_gst: minimizes the
// induced-MST weight over subsets passing `accept`.
template <typename AcceptFn>
SolveOutcome<SubgraphSolution> best_tree_over_subsets(const WeightedGraph& g,
                                                      AcceptFn&& accept) {
  const int n = g.vertex_count();
  const std::vector<Mask> adj = adjacency_masks(g);
  const std::vector<WeightedEdge> pool = edges_sorted_by_weight(g);

  bool have_best = false;
  ExtWeight best_weight;
  Mask best_mask = 0;
  std::vector<int> vertex_index(static_cast<size_t>(n));

  for (int k = 1; k <= n; ++k) {
    detail::for_each_combination(n, k, [&](const std::vector<int>& combo) {
      Mask mask = combo_mask(combo);
      if (!mask_connected(adj, mask) || !accept(adj, mask)) return true;
      for (int i = 0; i < k; ++i)
        vertex_index[static_cast<size_t>(combo[static_cast<size_t>(i)])] = i;
      MaskMst mst = mst_on_mask(pool, vertex_index, mask, k);
      if (mst.weight.is_infinite()) return true;
      if (!have_best || mst.weight < best_weight) {
        have_best = true;
        best_weight = mst.weight;
        best_mask = mask;
      }
      return true;
    });
  }
  if (!have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  SubgraphSolution solution = mst_induced(g, mask_to_set(best_mask));
  return SolveOutcome<SubgraphSolution>::feasible(solution, solution.weight);
}

}  // namespace

SolveOutcome<SubgraphSolution> exact_mdt(const WeightedGraph& g, std::size_t guard) {
  check_size(g, guard, "exact_mdt");
  const int n = g.vertex_count();
  return best_tree_over_subsets(
      g, [n](const std::vector<Mask>& adj, Mask u) { return mask_dominates(adj, n, u); });
}

SolveOutcome<SubgraphSolution> exact_gst(const WeightedGraph& g,
                                         const GroupFamily& groups, std::size_t guard) {
  check_size(g, guard, "exact_gst");
  if (!groups_valid(g, groups))
    throw std::out_of_range("exact_gst: group member outside graph");
  std::vector<Mask> group_masks;
  group_masks.reserve(static_cast<size_t>(groups.size()));
  for (const VertexSet& grp : groups) {
    Mask m = 0;
    for (Vertex v : grp) m |= Mask{1} << v;
    group_masks.push_back(m);
  }
  return best_tree_over_subsets(g, [&group_masks](const std::vector<Mask>&, Mask u) {
    for (Mask gm : group_masks)
      if (!(gm & u)) return false;
    return true;
  });
}

namespace {

// Star search over one center; leaf candidates are the center's
// finite-weight neighbors in ascending order.
void best_star_at(const WeightedGraph& g, const std::vector<Mask>& adj, Vertex center,
                  bool& have_best, ExtWeight& best_weight, Vertex& best_center,
                  Mask& best_leaves) {
  const int n = g.vertex_count();
  std::vector<Vertex> candidates;
  std::vector<ExtWeight> costs;
  for (const auto& nb : g.neighbors(center))
    if (nb.w.is_finite()) {
      candidates.push_back(nb.to);
      costs.push_back(nb.w);
    }
  const int c = static_cast<int>(candidates.size());
  for (int k = 0; k <= c; ++k) {
    detail::for_each_combination(c, k, [&](const std::vector<int>& combo) {
      Mask u = Mask{1} << center;
      ExtWeight w;
      for (int i : combo) {
        u |= Mask{1} << candidates[static_cast<size_t>(i)];
        w += costs[static_cast<size_t>(i)];
      }
      if (have_best && !(w < best_weight)) return true;
      if (!mask_dominates(adj, n, u)) return true;
      have_best = true;
      best_weight = w;
      best_center = center;
      best_leaves = u & ~(Mask{1} << center);
      return true;
    });
  }
}

SubgraphSolution star_solution(const WeightedGraph& g, Vertex center, Mask leaves) {
  VertexSet vertices = mask_to_set(leaves | (Mask{1} << center));
  std::vector<Edge> edges;
  for (Vertex v : mask_to_set(leaves)) edges.push_back(make_edge(center, v));
  return make_solution(g, SolutionKind::star, std::move(vertices), std::move(edges));
}

}  // namespace

SolveOutcome<SubgraphSolution> exact_mds(const WeightedGraph& g, std::size_t guard) {
  check_size(g, guard, "exact_mds");
  const std::vector<Mask> adj = adjacency_masks(g);
  bool have_best = false;
  ExtWeight best_weight;
  Vertex best_center = 0;
  Mask best_leaves = 0;
  for (Vertex c = 0; c < g.vertex_count(); ++c)
    best_star_at(g, adj, c, have_best, best_weight, best_center, best_leaves);
  if (!have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  SubgraphSolution s = star_solution(g, best_center, best_leaves);
  return SolveOutcome<SubgraphSolution>::feasible(s, s.weight);
}

SolveOutcome<SubgraphSolution> exact_mds_centered(const WeightedGraph& g, Vertex center,
                                                  std::size_t guard) {
  check_size(g, guard, "exact_mds");
  if (center < 0 || center >= g.vertex_count())
    throw std::out_of_range("exact_mds_centered: invalid center");
  const std::vector<Mask> adj = adjacency_masks(g);
  bool have_best = false;
  ExtWeight best_weight;
  Vertex best_center = center;
  Mask best_leaves = 0;
  best_star_at(g, adj, center, have_best, best_weight, best_center, best_leaves);
  if (!have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  SubgraphSolution s = star_solution(g, best_center, best_leaves);
  return SolveOutcome<SubgraphSolution>::feasible(s, s.weight);
}

namespace {

struct PathSearch {
  const WeightedGraph& g;
  const std::vector<Mask>& adj;
  int n = 0;
  bool have_best = false;
  ExtWeight best_weight = ExtWeight::zero();
  std::vector<Vertex> best_path = {};
  std::vector<Vertex> current = {};

  void consider(Mask visited, ExtWeight w) {
    if (w.is_infinite()) return;
    if (!mask_dominates(adj, n, visited)) return;
    if (!have_best || w < best_weight) {
      have_best = true;
      best_weight = w;
      best_path = current;
    }
  }

  void extend(Vertex start, Vertex at, Mask visited, ExtWeight w) {
    for (const auto& nb : g.neighbors(at)) {
      if ((visited >> nb.to) & 1) continue;
      ExtWeight next = w + nb.w;
      if (next.is_infinite()) continue;
      if (have_best && !(next < best_weight)) continue;
      current.push_back(nb.to);
      Mask grown = visited | (Mask{1} << nb.to);
      if (nb.to > start) consider(grown, next);
      extend(start, nb.to, grown, next);
      current.pop_back();
    }
  }
};

SubgraphSolution path_solution(const WeightedGraph& g, const std::vector<Vertex>& path) {
  std::vector<Edge> edges;
  for (size_t i = 1; i < path.size(); ++i)
    edges.push_back(make_edge(path[i - 1], path[i]));
  return make_solution(g, SolutionKind::path, VertexSet(path.begin(), path.end()),
                       std::move(edges));
}

}  // namespace

SolveOutcome<SubgraphSolution> exact_mdp(const WeightedGraph& g, std::size_t guard) {
  check_size(g, guard, "exact_mdp");
  const std::vector<Mask> adj = adjacency_masks(g);
  PathSearch search{g, adj, g.vertex_count()};
  // Singletons first, ascending; then DFS with start below end.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    search.current = {v};
    search.consider(Mask{1} << v, ExtWeight::zero());
  }
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    search.current = {s};
    search.extend(s, s, Mask{1} << s, ExtWeight::zero());
  }
  if (!search.have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  SubgraphSolution sol = path_solution(g, search.best_path);
  return SolveOutcome<SubgraphSolution>::feasible(sol, sol.weight);
}

SolveOutcome<CoverSelection> exact_set_cover(const SetCoverInstance& inst,
                                             std::size_t guard) {
  const int s = inst.set_count();
  if (static_cast<std::size_t>(s) > guard)
    throw GuardExceeded("exact_set_cover: " + std::to_string(s) +
                        " sets exceed the size guard of " + std::to_string(guard));

  const int m = inst.universe_size();
  const size_t blocks = static_cast<size_t>((m + 63) / 64);
  std::vector<std::vector<Mask>> set_bits(static_cast<size_t>(s),
                                          std::vector<Mask>(blocks, 0));
  std::vector<Mask> full(blocks, 0), reachable(blocks, 0);
  for (int e = 0; e < m; ++e)
    full[static_cast<size_t>(e / 64)] |= Mask{1} << (e % 64);
  for (int i = 0; i < s; ++i)
    for (int e : inst.set(i).elements) {
      set_bits[static_cast<size_t>(i)][static_cast<size_t>(e / 64)] |= Mask{1} << (e % 64);
      reachable[static_cast<size_t>(e / 64)] |= Mask{1} << (e % 64);
    }
  if (reachable != full) return SolveOutcome<CoverSelection>::infeasible();

  bool have_best = false;
  ExtWeight best_weight;
  CoverSelection best;
  std::vector<Mask> acc(blocks);
  for (int k = 0; k <= s; ++k) {
    detail::for_each_combination(s, k, [&](const std::vector<int>& combo) {
      std::fill(acc.begin(), acc.end(), 0);
      ExtWeight w;
      for (int i : combo) {
        w += inst.set(i).weight;
        for (size_t b = 0; b < blocks; ++b) acc[b] |= set_bits[static_cast<size_t>(i)][b];
      }
      if (have_best && !(w < best_weight)) return true;
      if (acc != full) return true;
      have_best = true;
      best_weight = w;
      best = combo;
      return true;
    });
  }
  if (!have_best) return SolveOutcome<CoverSelection>::infeasible();
  return SolveOutcome<CoverSelection>::feasible(best, best_weight);
}

VertexSet exact_dominating_set(const WeightedGraph& g, std::size_t guard) {
  check_size(g, guard, "exact_dominating_set");
  const int n = g.vertex_count();
  const std::vector<Mask> adj = adjacency_masks(g);
  VertexSet result;
  for (int k = 1; k <= n && result.empty(); ++k) {
    detail::for_each_combination(n, k, [&](const std::vector<int>& combo) {
      if (mask_dominates(adj, n, combo_mask(combo))) {
        result = combo;
        return false;
      }
      return true;
    });
  }
  return result;
}

namespace {

bool hamiltonian_dfs(const std::vector<Mask>& adj, int n, Vertex at, Mask visited,
                     int depth) {
  if (depth == n) return true;
  Mask options = adj[static_cast<size_t>(at)] & ~visited;
  while (options) {
    Vertex next = std::countr_zero(options);
    options &= options - 1;
    if (hamiltonian_dfs(adj, n, next, visited | (Mask{1} << next), depth + 1))
      return true;
  }
  return false;
}

}  // namespace

bool has_hamiltonian_path(const WeightedGraph& g, std::size_t guard) {
  check_size(g, guard, "has_hamiltonian_path");
  const int n = g.vertex_count();
  if (n == 1) return true;
  const std::vector<Mask> adj = adjacency_masks(g);
  for (Vertex s = 0; s < n; ++s)
    if (hamiltonian_dfs(adj, n, s, Mask{1} << s, 1)) return true;
  return false;
}

}  // namespace domtree
