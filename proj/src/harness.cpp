#include "domtree/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "domtree/errors.hpp"
#include "domtree/exact.hpp"
#include "domtree/io.hpp"
#include "domtree/reductions.hpp"

namespace domtree {

namespace {

constexpr int kMaxAttempts = 1000;

bool min_degree_at_least_one(const WeightedGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return false;
  return true;
}

bool fully_connected(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return true;
  VertexSet all(static_cast<size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
  return is_connected_induced(g, all);
}

}  // namespace

WeightedGraph gen_graph(const GenConfig& cfg, SplitMix64& rng) {
  if (cfg.n < 1) throw std::invalid_argument("gen_graph: n must be positive");
  if (cfg.edge_prob_den == 0 || cfg.edge_prob_num > cfg.edge_prob_den)
    throw std::invalid_argument("gen_graph: edge probability must be in [0,1]");
  if (cfg.weight_max < 1) throw std::invalid_argument("gen_graph: weight_max must be positive");

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    WeightedGraph g(cfg.n);
    for (Vertex u = 0; u < cfg.n; ++u)
      for (Vertex v = u + 1; v < cfg.n; ++v) {
        if (rng.below(cfg.edge_prob_den) < cfg.edge_prob_num) {
          std::int64_t w =
              1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.weight_max)));
          g.add_edge(u, v, ExtWeight::finite(w));
        }
      }
    if (cfg.require_connected && !fully_connected(g)) continue;
    if (cfg.require_min_degree_1 && !min_degree_at_least_one(g)) continue;
    return g;
  }
  throw std::runtime_error("gen_graph: flags unsatisfiable within the retry budget");
}

WeightedGraph gen_graph(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  return gen_graph(cfg, rng);
}

GroupFamily gen_groups(const GenConfig& cfg, int group_count, int n, SplitMix64& rng) {
  if (group_count < 1) throw std::invalid_argument("gen_groups: need at least one group");
  if (cfg.group_size_min < 1 || cfg.group_size_max < cfg.group_size_min)
    throw std::invalid_argument("gen_groups: bad group size bounds");
  GroupFamily family;
  for (int i = 0; i < group_count; ++i) {
    int span = cfg.group_size_max - cfg.group_size_min + 1;
    int size = cfg.group_size_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    size = std::min(size, n);
    VertexSet members;
    while (static_cast<int>(members.size()) < size) {
      Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (!std::count(members.begin(), members.end(), v)) members.push_back(v);
    }
    family.add_group(std::move(members));
  }
  return family;
}

GstInstance gen_gst_instance(const GenConfig& cfg, int group_count) {
  SplitMix64 rng(cfg.seed);
  GstInstance inst;
  inst.graph = gen_graph(cfg, rng);
  inst.groups = gen_groups(cfg, group_count, cfg.n, rng);
  return inst;
}

SetCoverInstance gen_set_cover(const ScGenConfig& cfg) {
  if (cfg.universe_max < 1 || cfg.sets_max < 1 || cfg.weight_max < 1)
    throw std::invalid_argument("gen_set_cover: bounds must be positive");
  SplitMix64 rng(cfg.seed);
  int universe = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.universe_max)));
  int sets = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.sets_max)));
  SetCoverInstance inst(universe);
  for (int i = 0; i < sets; ++i) {
    std::int64_t w =
        1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.weight_max)));
    VertexSet elements;
    for (int e = 0; e < universe; ++e)
      if (rng.next() % 2 == 0) elements.push_back(e);
    inst.add_set(std::move(elements), ExtWeight::finite(w));
  }
  return inst;
}

std::string to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::mdt_gst: return "mdt_gst";
    case SuiteKind::gst_mdt: return "gst_mdt";
    case SuiteKind::dom_mds: return "dom_mds";
    case SuiteKind::mds_sc: return "mds_sc";
    case SuiteKind::hp_mdp: return "hp_mdp";
  }
  return "?";
}

bool suite_kind_from(const std::string& token, SuiteKind& out) {
  static const std::pair<const char*, SuiteKind> table[] = {
      {"mdt_gst", SuiteKind::mdt_gst},
      {"gst_mdt", SuiteKind::gst_mdt},
      {"dom_mds", SuiteKind::dom_mds},
      {"mds_sc", SuiteKind::mds_sc},
      {"hp_mdp", SuiteKind::hp_mdp}};
  for (const auto& [name, kind] : table)
    if (token == name) {
      out = kind;
      return true;
    }
  return false;
}

GenConfig instance_config(const GenConfig& base, int index) {
  GenConfig cfg = base;
  cfg.seed = base.seed + static_cast<std::uint64_t>(index);
  if (base.n > 2) cfg.n = 2 + index % (base.n - 1);
  return cfg;
}

namespace {

std::string hex16(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

template <typename S>
std::string value_of(const SolveOutcome<S>& outcome) {
  return outcome.is_feasible() ? outcome.weight().to_string() : "infeasible";
}

std::uint64_t digest_graph(ProblemKind kind, const WeightedGraph& g) {
  Instance inst;
  inst.kind = kind;
  inst.graph = g;
  return fnv1a64(serialize_instance(inst));
}

int cycle_groups(int max, int index) {
  if (max <= 1) return 1;
  return 1 + index % max;
}

struct RecordBuilder {
  InstanceRecord rec;
  bool violated = false;

  explicit RecordBuilder(int index) { rec.index = index; }

  void violation(const std::string& why) {
    violated = true;
    rec.status = "violation";
    if (!rec.note.empty()) rec.note += "; ";
    rec.note += why;
  }

  void finish() {
    if (rec.status.empty()) rec.status = "ok";
    if (rec.lifts.empty()) rec.lifts = "-";
  }
};

void check_equal_values(RecordBuilder& rb, const ExtWeight& a, bool a_feasible,
                        const ExtWeight& b, bool b_feasible) {
  if (a_feasible != b_feasible) {
    rb.violation("feasibility mismatch");
    return;
  }
  if (a_feasible && a != b) rb.violation("value mismatch");
}

void run_mdt_gst_instance(const GenConfig& cfg, int index, RecordBuilder& rb) {
  GenConfig gi = instance_config(cfg, index);
  WeightedGraph g = gen_graph(gi);
  rb.rec.digest = digest_graph(ProblemKind::mdt, g);

  SolveOutcome<SubgraphSolution> src = exact_mdt(g);
  MdtToGstArtifact art = reduce_mdt_to_gst(g);
  SolveOutcome<SubgraphSolution> red = exact_gst(g, art.groups);
  rb.rec.source_value = value_of(src);
  rb.rec.reduced_value = value_of(red);
  check_equal_values(rb, src.weight(), src.is_feasible(), red.weight(), red.is_feasible());

  try {
    if (red.is_feasible()) {
      SubgraphSolution lifted = lift_gst_to_mdt_solution(art, red.solution());
      if (lifted.weight != red.weight()) rb.violation("lift changed weight");
    }
    if (src.is_feasible()) embed_mdt_solution_in_gst(art, src.solution());
    rb.rec.lifts = "ok";
  } catch (const std::exception& e) {
    rb.rec.lifts = "fail";
    rb.violation(std::string("lift: ") + e.what());
  }
}

void run_gst_mdt_instance(const GenConfig& cfg, int index, RecordBuilder& rb) {
  GenConfig gi = instance_config(cfg, index);
  GstInstance inst = gen_gst_instance(gi, cycle_groups(cfg.group_count, index));

  Instance file;
  file.kind = ProblemKind::gst;
  file.graph = inst.graph;
  file.groups = inst.groups;
  rb.rec.digest = fnv1a64(serialize_instance(file));

  SolveOutcome<SubgraphSolution> src = exact_gst(inst.graph, inst.groups);
  GstToMdtArtifact art = reduce_gst_to_mdt(inst.graph, inst.groups);
  SolveOutcome<SubgraphSolution> red = exact_mdt(art.output);
  rb.rec.source_value = value_of(src);
  rb.rec.reduced_value = value_of(red);
  check_equal_values(rb, src.weight(), src.is_feasible(), red.weight(), red.is_feasible());

  try {
    if (red.is_feasible()) {
      SubgraphSolution lifted = lift_mdt_to_gst_solution(art, red.solution());
      if (lifted.weight != red.weight()) rb.violation("lift changed weight");
    }
    if (src.is_feasible()) {
      SubgraphSolution embedded = embed_gst_solution_in_mdt(art, src.solution());
      if (embedded.weight != src.weight()) rb.violation("embedding changed weight");
    }
    rb.rec.lifts = "ok";
  } catch (const std::exception& e) {
    rb.rec.lifts = "fail";
    rb.violation(std::string("lift: ") + e.what());
  }
}

void run_dom_mds_instance(const GenConfig& cfg, int index, RecordBuilder& rb) {
  GenConfig gi = instance_config(cfg, index);
  WeightedGraph g = gen_graph(gi);
  rb.rec.digest = digest_graph(ProblemKind::dom, g);

  if (!min_degree_at_least_one(g)) {
    rb.rec.status = "skipped";
    rb.rec.note = "isolated vertex; construction rejects the instance";
    rb.rec.source_value = "-";
    rb.rec.reduced_value = "-";
    return;
  }

  VertexSet dom = exact_dominating_set(g);
  DomToMdsArtifact art = reduce_dom_to_mds(g);
  SolveOutcome<SubgraphSolution> red = exact_mds(art.output);
  rb.rec.source_value = std::to_string(dom.size());
  rb.rec.reduced_value = value_of(red);

  if (!red.is_feasible()) {
    rb.violation("reduced instance infeasible");
    return;
  }
  if (red.weight() != ExtWeight::finite(static_cast<std::int64_t>(dom.size())))
    rb.violation("value mismatch");

  try {
    VertexSet lifted = lift_mds_to_dom_solution(art, red.solution());
    if (lifted.size() != dom.size()) rb.violation("lifted set has non-optimal size");
    SubgraphSolution star = star_from_dominating_set(art, dom);
    if (star.weight != ExtWeight::finite(static_cast<std::int64_t>(dom.size())))
      rb.violation("embedded star weight mismatch");
    rb.rec.lifts = "ok";
  } catch (const std::exception& e) {
    rb.rec.lifts = "fail";
    rb.violation(std::string("lift: ") + e.what());
  }
}

void run_mds_sc_instance(const GenConfig& cfg, int index, RecordBuilder& rb) {
  GenConfig gi = instance_config(cfg, index);
  WeightedGraph g = gen_graph(gi);
  rb.rec.digest = digest_graph(ProblemKind::mds, g);

  std::string values;
  bool lifts_ok = true;
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    MdsToScArtifact art = reduce_mds_to_sc(g, c);
    SolveOutcome<CoverSelection> cover = exact_set_cover(art.output);
    SolveOutcome<SubgraphSolution> star = exact_mds_centered(g, c);
    if (cover.is_feasible() != star.is_feasible()) {
      rb.violation("center " + std::to_string(c) + ": feasibility mismatch");
      continue;
    }
    if (cover.is_feasible() && cover.weight() != star.weight())
      rb.violation("center " + std::to_string(c) + ": value mismatch");
    try {
      if (cover.is_feasible()) {
        SubgraphSolution lifted = lift_sc_to_mds_solution(art, cover.solution());
        if (lifted.weight != cover.weight())
          rb.violation("center " + std::to_string(c) + ": lift changed weight");
      }
      if (star.is_feasible()) {
        CoverSelection back = cover_from_star(art, star.solution());
        if (validate_cover(art.output, back).weight != star.weight())
          rb.violation("center " + std::to_string(c) + ": cover weight mismatch");
      }
    } catch (const std::exception& e) {
      lifts_ok = false;
      rb.violation("center " + std::to_string(c) + ": lift: " + e.what());
    }
  }
  rb.rec.source_value = "-";
  rb.rec.reduced_value = "-";
  rb.rec.lifts = lifts_ok ? "ok" : "fail";
  rb.rec.note = rb.rec.note.empty()
                    ? "centers=" + std::to_string(g.vertex_count())
                    : rb.rec.note;
}

void run_hp_mdp_instance(const GenConfig& cfg, int index, RecordBuilder& rb) {
  GenConfig gi = instance_config(cfg, index);
  WeightedGraph g = gen_graph(gi);
  rb.rec.digest = digest_graph(ProblemKind::hp, g);

  bool hp = has_hamiltonian_path(g);
  HpToMdpArtifact art = reduce_hp_to_mdp(g);
  SolveOutcome<SubgraphSolution> out = exact_mdp(art.output);
  bool decided = decide_hp_via_mdp(art, out);
  rb.rec.source_value = hp ? "yes" : "no";
  rb.rec.reduced_value = value_of(out);
  rb.rec.lifts = "-";
  if (hp != decided) rb.violation("decision mismatch");
}

}  // namespace

SuiteReport run_equivalence_suite(SuiteKind kind, const GenConfig& cfg, int count) {
  SuiteReport report;
  report.suite = to_string(kind);
  report.seed = cfg.seed;
  report.count = count;
  for (int i = 0; i < count; ++i) {
    RecordBuilder rb(i);
    try {
      switch (kind) {
        case SuiteKind::mdt_gst: run_mdt_gst_instance(cfg, i, rb); break;
        case SuiteKind::gst_mdt: run_gst_mdt_instance(cfg, i, rb); break;
        case SuiteKind::dom_mds: run_dom_mds_instance(cfg, i, rb); break;
        case SuiteKind::mds_sc: run_mds_sc_instance(cfg, i, rb); break;
        case SuiteKind::hp_mdp: run_hp_mdp_instance(cfg, i, rb); break;
      }
    } catch (const GuardExceeded& e) {
      rb.rec.status = "aborted";
      rb.rec.note = e.what();
      rb.finish();
      report.records.push_back(rb.rec);
      report.aborted = true;
      break;
    }
    rb.finish();
    if (rb.violated) ++report.violations;
    if (rb.rec.status == "skipped") ++report.skipped;
    report.records.push_back(rb.rec);
  }
  return report;
}

SuiteReport run_ratio_suite(const GenConfig& cfg, int count) {
  SuiteReport report;
  report.suite = "ratio";
  report.seed = cfg.seed;
  report.count = count;

  auto note_ratio = [&report](std::optional<Ratio> r) {
    if (!r) return;
    if (!report.worst_ratio || *report.worst_ratio < *r) report.worst_ratio = r;
  };

  for (int i = 0; i < count; ++i) {
    RecordBuilder rb(i);
    GenConfig gi = instance_config(cfg, i);
    try {
      WeightedGraph g = gen_graph(gi);
      rb.rec.digest = digest_graph(ProblemKind::mds, g);

      SolveOutcome<SubgraphSolution> mds_exact = exact_mds(g);
      SolveOutcome<SubgraphSolution> mds_approx = approx_mds(g);
      rb.rec.source_value = value_of(mds_exact);
      rb.rec.reduced_value = value_of(mds_approx);
      if (mds_exact.is_feasible() != mds_approx.is_feasible()) {
        rb.violation("mds feasibility mismatch");
      } else if (mds_exact.is_feasible()) {
        ApproxReport<SubgraphSolution> mds_report = make_approx_report(
            mds_approx.solution(), mds_approx.weight(), mds_exact.weight());
        if (mds_exact.weight().units() == 0) {
          if (mds_approx.weight().units() != 0)
            rb.violation("mds optimum 0 but approximation positive");
        } else {
          note_ratio(mds_report.ratio);
          Ratio bound = harmonic_number(g.vertex_count());
          if (mds_report.ratio && !(*mds_report.ratio <= bound))
            rb.violation("mds ratio above H(n): " + mds_report.ratio->to_string());
          if (mds_approx.weight() < mds_exact.weight())
            rb.violation("approximation below optimum");
          if (mds_report.ratio)
            rb.rec.note = "mds_ratio=" + mds_report.ratio->to_string();
        }
      }

      SolveOutcome<SubgraphSolution> mdt_exact = exact_mdt(g);
      SolveOutcome<SubgraphSolution> mdt_approx = approx_mdt(g);
      if (mdt_exact.is_feasible() != mdt_approx.is_feasible()) {
        rb.violation("mdt feasibility mismatch");
      } else if (mdt_exact.is_feasible()) {
        ApproxReport<SubgraphSolution> mdt_report = make_approx_report(
            mdt_approx.solution(), mdt_approx.weight(), mdt_exact.weight());
        if (mdt_exact.weight().units() == 0) {
          if (mdt_approx.weight().units() != 0)
            rb.violation("mdt optimum 0 but heuristic positive");
        } else {
          note_ratio(mdt_report.ratio);
          if (mdt_approx.weight() < mdt_exact.weight())
            rb.violation("heuristic below optimum");
          if (mdt_report.ratio) {
            if (!rb.rec.note.empty()) rb.rec.note += " ";
            rb.rec.note += "mdt_ratio=" + mdt_report.ratio->to_string();
          }
        }
      }
      rb.rec.lifts = "-";
    } catch (const GuardExceeded& e) {
      rb.rec.status = "aborted";
      rb.rec.note = e.what();
      rb.finish();
      report.records.push_back(rb.rec);
      report.aborted = true;
      break;
    }
    rb.finish();
    if (rb.violated) ++report.violations;
    report.records.push_back(rb.rec);
  }
  return report;
}

SuiteReport run_greedy_bound_suite(const ScGenConfig& cfg, int count) {
  SuiteReport report;
  report.suite = "greedy_bound";
  report.seed = cfg.seed;
  report.count = count;
  for (int i = 0; i < count; ++i) {
    RecordBuilder rb(i);
    ScGenConfig ci = cfg;
    ci.seed = cfg.seed + static_cast<std::uint64_t>(i);
    try {
      SetCoverInstance inst = gen_set_cover(ci);
      Instance file;
      file.kind = ProblemKind::sc;
      file.sets = inst;
      rb.rec.digest = fnv1a64(serialize_instance(file));

      SolveOutcome<CoverSelection> exact = exact_set_cover(inst);
      SolveOutcome<CoverSelection> greedy = greedy_set_cover(inst);
      rb.rec.source_value = value_of(exact);
      rb.rec.reduced_value = value_of(greedy);
      rb.rec.lifts = "-";
      if (exact.is_feasible() != greedy.is_feasible()) {
        rb.violation("feasibility mismatch");
      } else if (exact.is_feasible()) {
        if (greedy.weight() < exact.weight()) rb.violation("greedy below optimum");
        if (exact.weight().units() == 0) {
          if (greedy.weight().units() != 0)
            rb.violation("optimum 0 but greedy positive");
        } else {
          std::optional<Ratio> r = weight_ratio(greedy.weight(), exact.weight());
          Ratio bound = harmonic_number(inst.universe_size());
          if (r && !(*r <= bound)) rb.violation("greedy above H(m): " + r->to_string());
          if (r) {
            rb.rec.note = "ratio=" + r->to_string();
            if (!report.worst_ratio || *report.worst_ratio < *r) report.worst_ratio = r;
          }
        }
      }
    } catch (const GuardExceeded& e) {
      rb.rec.status = "aborted";
      rb.rec.note = e.what();
      rb.finish();
      report.records.push_back(rb.rec);
      report.aborted = true;
      break;
    }
    rb.finish();
    if (rb.violated) ++report.violations;
    report.records.push_back(rb.rec);
  }
  return report;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " seed " << report.seed << " count "
      << report.count << '\n';
  for (const InstanceRecord& rec : report.records) {
    out << "i " << rec.index << ' ' << hex16(rec.digest) << " src=" << rec.source_value
        << " red=" << rec.reduced_value << " lifts=" << rec.lifts << ' ' << rec.status;
    if (!rec.note.empty()) out << ' ' << rec.note;
    out << '\n';
  }
  out << "violations " << report.violations << " skipped " << report.skipped
      << " worst_ratio "
      << (report.worst_ratio ? report.worst_ratio->to_string() : "-") << '\n';
  return out.str();
}

std::string summary_json(const SuiteReport& report) {
  std::ostringstream out;
  out << "{\"suite\":\"" << report.suite << "\",\"seed\":" << report.seed
      << ",\"count\":" << report.count << ",\"violations\":" << report.violations
      << ",\"worst_ratio\":";
  if (report.worst_ratio)
    out << '"' << report.worst_ratio->to_string() << '"';
  else
    out << "null";
  out << '}';
  return out.str();
}

}  // namespace domtree
