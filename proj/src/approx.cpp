#include "domtree/approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "domtree/reductions.hpp"

namespace domtree {

namespace {

using Wide = __int128;

Wide wide(std::int64_t x) { return static_cast<Wide>(x); }

}  // namespace

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("Ratio: needs num >= 0, den > 0");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Ratio{num / g, den / g};
}

bool Ratio::operator<(const Ratio& other) const {
  return wide(num) * wide(other.den) < wide(other.num) * wide(den);
}

bool Ratio::operator<=(const Ratio& other) const {
  return wide(num) * wide(other.den) <= wide(other.num) * wide(den);
}

std::string Ratio::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Ratio harmonic_number(int m) {
  if (m < 0) throw std::invalid_argument("harmonic_number: negative argument");
  // Accumulate num/den + 1/k exactly, reducing as we go.
  std::int64_t num = 0, den = 1;
  for (int k = 1; k <= m; ++k) {
    Wide wnum = wide(num) * wide(k) + wide(den);
    Wide wden = wide(den) * wide(k);
    Wide r = wide_gcd(wnum, wden);
    wnum /= r;
    wden /= r;
    if (wnum > std::numeric_limits<std::int64_t>::max() ||
        wden > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("harmonic_number: exact value exceeds int64");
    num = static_cast<std::int64_t>(wnum);
    den = static_cast<std::int64_t>(wden);
  }
  return Ratio{num, den};
}

std::optional<Ratio> weight_ratio(ExtWeight approx, ExtWeight optimum) {
  if (approx.is_infinite() || optimum.is_infinite())
    throw std::invalid_argument("weight_ratio: weights must be finite");
  if (optimum.units() == 0) return std::nullopt;
  return Ratio::of(approx.units(), optimum.units());
}

SolveOutcome<CoverSelection> greedy_set_cover(const SetCoverInstance& inst) {
  const int m = inst.universe_size();
  const int s = inst.set_count();

  std::vector<char> covered(static_cast<size_t>(m), 0);
  std::vector<char> in_some_set(static_cast<size_t>(m), 0);
  for (int i = 0; i < s; ++i)
    for (int e : inst.set(i).elements) in_some_set[static_cast<size_t>(e)] = 1;
  for (int e = 0; e < m; ++e)
    if (!in_some_set[static_cast<size_t>(e)])
      return SolveOutcome<CoverSelection>::infeasible();

  int remaining = m;
  ExtWeight total;
  CoverSelection picked;
  while (remaining > 0) {
    int best = -1;
    std::int64_t best_new = 0;
    std::int64_t best_w = 0;
    for (int i = 0; i < s; ++i) {
      std::int64_t fresh = 0;
      for (int e : inst.set(i).elements)
        if (!covered[static_cast<size_t>(e)]) ++fresh;
      if (fresh == 0) continue;
      std::int64_t w = inst.set(i).weight.units();
      // Strict cross-multiplied comparison keeps the lowest index on ties.
      if (best < 0 || wide(w) * wide(best_new) < wide(best_w) * wide(fresh)) {
        best = i;
        best_new = fresh;
        best_w = w;
      }
    }
    for (int e : inst.set(best).elements)
      if (!covered[static_cast<size_t>(e)]) {
        covered[static_cast<size_t>(e)] = 1;
        --remaining;
      }
    total += inst.set(best).weight;
    picked.push_back(best);
  }
  std::sort(picked.begin(), picked.end());
  return SolveOutcome<CoverSelection>::feasible(picked, total);
}

SolveOutcome<SubgraphSolution> approx_mds(const WeightedGraph& g) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("approx_mds: graph has no vertices");
  bool have_best = false;
  SubgraphSolution best;
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    MdsToScArtifact art = reduce_mds_to_sc(g, c);
    SolveOutcome<CoverSelection> cover = greedy_set_cover(art.output);
    if (!cover.is_feasible()) continue;
    SubgraphSolution star = lift_sc_to_mds_solution(art, cover.solution());
    if (!have_best || star.weight < best.weight) {
      have_best = true;
      best = star;
    }
  }
  if (!have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  return SolveOutcome<SubgraphSolution>::feasible(best, best.weight);
}

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

// Multi-source Dijkstra over finite-weight edges. Distances are exact
// unit counts; parents are set on strict improvement only, so the
// shortest-path forest is deterministic.
struct ShortestPaths {
  std::vector<std::int64_t> dist;
  std::vector<Vertex> parent;
};

ShortestPaths dijkstra_from(const WeightedGraph& g, const std::vector<Vertex>& sources) {
  ShortestPaths sp;
  sp.dist.assign(static_cast<size_t>(g.vertex_count()), kUnreached);
  sp.parent.assign(static_cast<size_t>(g.vertex_count()), -1);
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (Vertex v : sources) {
    sp.dist[static_cast<size_t>(v)] = 0;
    queue.push({0, v});
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != sp.dist[static_cast<size_t>(v)]) continue;
    for (const auto& nb : g.neighbors(v)) {
      if (nb.w.is_infinite()) continue;
      std::int64_t nd = d + nb.w.units();
      if (nd < sp.dist[static_cast<size_t>(nb.to)]) {
        sp.dist[static_cast<size_t>(nb.to)] = nd;
        sp.parent[static_cast<size_t>(nb.to)] = v;
        queue.push({nd, nb.to});
      }
    }
  }
  return sp;
}

struct GrownTree {
  bool feasible = false;
  VertexSet vertices;
  std::vector<Edge> edges;
};

GrownTree grow_from_root(const WeightedGraph& g, const GroupFamily& groups, Vertex root) {
  const size_t gcount = static_cast<size_t>(groups.size());
  std::vector<char> in_tree(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<Vertex> tree{root};
  std::vector<Edge> edges;
  in_tree[static_cast<size_t>(root)] = 1;

  std::vector<char> hit(gcount, 0);
  auto mark_hits = [&](Vertex v) {
    for (size_t i = 0; i < gcount; ++i)
      if (!hit[i] && vertex_set_contains(groups.group(static_cast<int>(i)), v))
        hit[i] = 1;
  };
  mark_hits(root);

  auto all_hit = [&] {
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  };

  while (!all_hit()) {
    ShortestPaths sp = dijkstra_from(g, tree);
    Vertex target = -1;
    std::int64_t target_dist = kUnreached;
    for (size_t i = 0; i < gcount; ++i) {
      if (hit[i]) continue;
      for (Vertex v : groups.group(static_cast<int>(i))) {
        std::int64_t d = sp.dist[static_cast<size_t>(v)];
        if (d == kUnreached) continue;
        if (d < target_dist || (d == target_dist && v < target)) {
          target = v;
          target_dist = d;
        }
      }
    }
    if (target < 0) return GrownTree{};  // some group unreachable through finite edges

    // Walk back to the tree, attaching the path.
    std::vector<Vertex> chain;
    Vertex at = target;
    while (!in_tree[static_cast<size_t>(at)]) {
      chain.push_back(at);
      at = sp.parent[static_cast<size_t>(at)];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      edges.push_back(make_edge(at, *it));
      in_tree[static_cast<size_t>(*it)] = 1;
      tree.push_back(*it);
      mark_hits(*it);
      at = *it;
    }
  }

  GrownTree out;
  out.feasible = true;
  out.vertices = normalize_vertex_set(tree);
  out.edges = std::move(edges);
  return out;
}

// Removes leaves (lowest index first, rescanning after each removal)
// while every group stays hit.
void prune_leaves(const WeightedGraph& g, const GroupFamily& groups, GrownTree& t) {
  const size_t gcount = static_cast<size_t>(groups.size());
  std::vector<int> members(gcount, 0);
  for (size_t i = 0; i < gcount; ++i)
    for (Vertex v : groups.group(static_cast<int>(i)))
      if (vertex_set_contains(t.vertices, v)) ++members[i];

  auto degree_of = [&](Vertex v) {
    int d = 0;
    for (const Edge& e : t.edges)
      if (e.u == v || e.v == v) ++d;
    return d;
  };

  bool removed = true;
  while (removed && t.vertices.size() > 1) {
    removed = false;
    for (Vertex v : t.vertices) {
      if (degree_of(v) != 1) continue;
      bool needed = false;
      for (size_t i = 0; i < gcount; ++i)
        if (vertex_set_contains(groups.group(static_cast<int>(i)), v) && members[i] == 1) {
          needed = true;
          break;
        }
      if (needed) continue;
      for (size_t i = 0; i < gcount; ++i)
        if (vertex_set_contains(groups.group(static_cast<int>(i)), v)) --members[i];
      t.vertices.erase(std::lower_bound(t.vertices.begin(), t.vertices.end(), v));
      t.edges.erase(std::remove_if(t.edges.begin(), t.edges.end(),
                                   [v](const Edge& e) { return e.u == v || e.v == v; }),
                    t.edges.end());
      removed = true;
      break;
    }
  }
  (void)g;
}

}  // namespace

SolveOutcome<SubgraphSolution> heuristic_gst(const WeightedGraph& g,
                                             const GroupFamily& groups) {
  if (g.vertex_count() < 1)
    throw std::invalid_argument("heuristic_gst: graph has no vertices");
  if (!groups_valid(g, groups))
    throw std::out_of_range("heuristic_gst: group member outside graph");

  const int n = g.vertex_count();
  std::vector<Vertex> roots;
  if (n <= 64) {
    roots.resize(static_cast<size_t>(n));
    std::iota(roots.begin(), roots.end(), 0);
  } else {
    // Deterministic stride sample of 64 roots.
    for (int i = 0; i < 64; ++i)
      roots.push_back(static_cast<Vertex>(static_cast<std::int64_t>(i) * n / 64));
    roots = normalize_vertex_set(roots);
  }

  bool have_best = false;
  SubgraphSolution best;
  for (Vertex root : roots) {
    GrownTree grown = grow_from_root(g, groups, root);
    if (!grown.feasible) continue;
    prune_leaves(g, groups, grown);
    SubgraphSolution tree =
        make_solution(g, SolutionKind::tree, grown.vertices, grown.edges);
    if (tree.weight.is_infinite()) continue;
    if (!validate_gst(g, groups, tree))
      throw std::logic_error("heuristic_gst: produced tree misses a group");
    if (!have_best || tree.weight < best.weight) {
      have_best = true;
      best = tree;
    }
  }
  if (!have_best) return SolveOutcome<SubgraphSolution>::infeasible();
  return SolveOutcome<SubgraphSolution>::feasible(best, best.weight);
}

SolveOutcome<SubgraphSolution> approx_mdt(const WeightedGraph& g) {
  MdtToGstArtifact art = reduce_mdt_to_gst(g);
  SolveOutcome<SubgraphSolution> out = heuristic_gst(g, art.groups);
  if (!out.is_feasible()) return out;
  SubgraphSolution lifted = lift_gst_to_mdt_solution(art, out.solution());
  return SolveOutcome<SubgraphSolution>::feasible(lifted, lifted.weight);
}

}  // namespace domtree
