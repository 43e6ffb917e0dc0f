#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "domtree/graph.hpp"
#include "domtree/outcome.hpp"
#include "domtree/set_cover.hpp"
#include "domtree/solution.hpp"

namespace domtree {

/// Exact non-negative rational, normalized to lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den);

  friend bool operator==(const Ratio&, const Ratio&) = default;
  bool operator<(const Ratio& other) const;
  bool operator<=(const Ratio& other) const;

  std::string to_string() const;  // "num/den"
};

/// H(m) = 1 + 1/2 + ... + 1/m as an exact rational; H(0) = 0. Throws
/// std::overflow_error once the exact value stops fitting in int64.
Ratio harmonic_number(int m);

/// approx/optimum as an exact rational. Both weights must be finite;
/// nullopt when the optimum is 0 (the multiplicative ratio is undefined
/// and callers should pass iff the approximation is also 0).
std::optional<Ratio> weight_ratio(ExtWeight approx, ExtWeight optimum);

/// Approximation run bundled with the oracle value when one was
/// computed at desk scale. ratio is present only when oracle_weight is
/// present and positive.
template <typename S>
struct ApproxReport {
  S solution;
  ExtWeight weight;
  std::optional<ExtWeight> oracle_weight;
  std::optional<Ratio> ratio;
};

template <typename S>
ApproxReport<S> make_approx_report(S solution, ExtWeight weight,
                                   std::optional<ExtWeight> oracle_weight) {
  ApproxReport<S> report{std::move(solution), weight, oracle_weight, std::nullopt};
  if (oracle_weight && oracle_weight->is_finite() && oracle_weight->units() > 0)
    report.ratio = weight_ratio(weight, *oracle_weight);
  return report;
}

/// Classical greedy: repeatedly pick the set minimizing
/// weight / newly-covered, skipping sets that cover nothing new;
/// zero-weight sets have ratio 0 and are taken eagerly; ties break
/// toward the lowest set index. Guarantees weight <= H(universe) * OPT.
SolveOutcome<CoverSelection> greedy_set_cover(const SetCoverInstance& inst);

/// Dominating-star approximation: run greedy set cover on the
/// per-center reduction for every vertex and keep the lightest lifted
/// star. Infeasible iff every center is.
SolveOutcome<SubgraphSolution> approx_mds(const WeightedGraph& g);

/// Shortest-path greedy merge for group Steiner: from each candidate
/// root, repeatedly attach the closest vertex of a not-yet-hit group
/// via a finite-weight shortest path, then prune leaves whose removal
/// keeps every group hit. All vertices serve as roots up to 64; beyond
/// that a deterministic stride sample of 64 roots is used. Ties break
/// toward lower vertex index everywhere.
SolveOutcome<SubgraphSolution> heuristic_gst(const WeightedGraph& g,
                                             const GroupFamily& groups);

/// Dominating-tree pipeline: closed-neighborhood groups, heuristic_gst,
/// identity lift. The result is checked to be a dominating tree.
SolveOutcome<SubgraphSolution> approx_mdt(const WeightedGraph& g);

}  // namespace domtree
