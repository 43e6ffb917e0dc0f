#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domtree/approx.hpp"
#include "domtree/graph.hpp"
#include "domtree/prng.hpp"
#include "domtree/set_cover.hpp"

namespace domtree {

/// Deterministic Erdős–Rényi-style generation. The procedure is fixed:
/// a SplitMix64 stream seeded with `seed` draws one word per vertex
/// pair in lexicographic (u, v) order; the pair becomes an edge iff
/// word % edge_prob_den < edge_prob_num, and each accepted edge
/// immediately draws its weight as 1 + word % weight_max. Flags are
/// honored by rejection sampling: failed attempts keep drawing from the
/// same stream, up to 1000 attempts.
struct GenConfig {
  std::uint64_t seed = 1;
  int n = 6;
  std::uint32_t edge_prob_num = 1;
  std::uint32_t edge_prob_den = 2;
  std::int64_t weight_max = 10;
  bool require_connected = false;
  bool require_min_degree_1 = false;
  // Group generation (gst instances): each group draws its size
  // uniformly from [group_size_min, group_size_max] (clamped to n),
  // then draws vertices until that many are distinct.
  int group_count = 2;
  int group_size_min = 1;
  int group_size_max = 2;
};

WeightedGraph gen_graph(const GenConfig& cfg);
WeightedGraph gen_graph(const GenConfig& cfg, SplitMix64& rng);
GroupFamily gen_groups(const GenConfig& cfg, int group_count, int n, SplitMix64& rng);

struct GstInstance {
  WeightedGraph graph;
  GroupFamily groups;
};

/// Graph first, then groups, from one stream.
GstInstance gen_gst_instance(const GenConfig& cfg, int group_count);

/// Set-cover generation: universe 1 + word % universe_max, set count
/// 1 + word % sets_max; per set a weight 1 + word % weight_max followed
/// by one word per element (included iff even). Instances may be
/// infeasible; that is intentional.
struct ScGenConfig {
  std::uint64_t seed = 1;
  int universe_max = 10;
  int sets_max = 12;
  std::int64_t weight_max = 10;
};

SetCoverInstance gen_set_cover(const ScGenConfig& cfg);

/// Per-instance derivation used by every suite: instance i draws from
/// seed base.seed + i and cycles its vertex count over 2..base.n
/// (constant when base.n <= 2).
GenConfig instance_config(const GenConfig& base, int index);

enum class SuiteKind { mdt_gst, gst_mdt, dom_mds, mds_sc, hp_mdp };

std::string to_string(SuiteKind kind);
bool suite_kind_from(const std::string& token, SuiteKind& out);

struct InstanceRecord {
  int index = 0;
  std::uint64_t digest = 0;
  std::string source_value;
  std::string reduced_value;
  std::string lifts;   // "ok", "-", or a failure note
  std::string status;  // "ok", "violation", "skipped", "aborted"
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  int violations = 0;
  int skipped = 0;
  bool aborted = false;
  std::optional<Ratio> worst_ratio;
  std::vector<InstanceRecord> records;
};

/// Line-oriented text form; identical runs produce identical bytes.
std::string to_text(const SuiteReport& report);

/// One-line machine-readable summary with fixed field names:
/// suite, seed, count, violations, worst_ratio.
std::string summary_json(const SuiteReport& report);

/// Runs one reduction's claim pair over `count` generated instances:
/// source oracle, reduce, target oracle, value comparison, and both
/// solution lifts. Instance i uses seed cfg.seed + i and cycles its
/// vertex count over 2..cfg.n (group counts cycle over
/// 1..cfg.group_count for gst sources). A GuardExceeded aborts with a
/// partial report.
SuiteReport run_equivalence_suite(SuiteKind kind, const GenConfig& cfg, int count);

/// Per instance: approx_mds against exact_mds with the H(n) bound
/// asserted, and approx_mdt against exact_mdt with the ratio recorded
/// but unbounded. When an optimum is 0 the instance passes iff the
/// approximation is also 0.
SuiteReport run_ratio_suite(const GenConfig& cfg, int count);

/// Greedy-vs-exact set cover over generated instances, asserting the
/// H(universe) bound in exact arithmetic.
SuiteReport run_greedy_bound_suite(const ScGenConfig& cfg, int count);

}  // namespace domtree
