// Command-line surface for the dominating-tree / group-Steiner toolkit:
// solve, reduce, lift, verify, gen and suite subcommands over the text
// instance format. Exit codes: 0 success, 1 infeasible or invalid,
// 2 input error, 3 size guard exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domtree/approx.hpp"
#include "domtree/errors.hpp"
#include "domtree/exact.hpp"
#include "domtree/harness.hpp"
#include "domtree/io.hpp"
#include "domtree/reductions.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

domtree::ProblemKind parse_kind(const std::string& token) {
  domtree::ProblemKind kind;
  if (!domtree::problem_kind_from(token, kind))
    throw std::invalid_argument("unknown problem kind '" + token + "'");
  return kind;
}

struct SolveArgs {
  std::string problem;
  std::string method = "exact";
  std::string file;
  std::optional<std::size_t> guard;
};

int run_solve(const SolveArgs& args) {
  using namespace domtree;
  ProblemKind kind = parse_kind(args.problem);
  Instance inst = parse_instance(read_file(args.file));
  if (inst.kind != kind)
    throw std::invalid_argument("instance file is '" + to_string(inst.kind) +
                                "', not '" + args.problem + "'");
  const bool exact = args.method == "exact";
  if (!exact && args.method != "approx")
    throw std::invalid_argument("method must be exact or approx");

  auto guard_or = [&args](std::size_t fallback) {
    return args.guard.value_or(fallback);
  };
  auto print_outcome = [](const SolveOutcome<SubgraphSolution>& out) {
    if (!out.is_feasible()) {
      std::cout << "infeasible\n";
      return kExitInfeasible;
    }
    std::cout << serialize_solution(solution_file_of(out.solution()));
    return kExitOk;
  };

  switch (kind) {
    case ProblemKind::mdt:
      return print_outcome(exact ? exact_mdt(inst.graph, guard_or(kDefaultSubsetGuard))
                                 : approx_mdt(inst.graph));
    case ProblemKind::gst:
      return print_outcome(exact
                               ? exact_gst(inst.graph, inst.groups,
                                           guard_or(kDefaultSubsetGuard))
                               : heuristic_gst(inst.graph, inst.groups));
    case ProblemKind::mds:
      return print_outcome(exact ? exact_mds(inst.graph, guard_or(kDefaultSubsetGuard))
                                 : approx_mds(inst.graph));
    case ProblemKind::mdp:
      if (!exact) throw std::invalid_argument("no approx method for mdp");
      return print_outcome(exact_mdp(inst.graph, guard_or(kDefaultPathGuard)));
    case ProblemKind::dom: {
      if (!exact) throw std::invalid_argument("no approx method for dom");
      VertexSet dom = exact_dominating_set(inst.graph, guard_or(kDefaultSubsetGuard));
      SolutionFile sol;
      sol.kind = SolutionFile::Kind::vertex_set;
      sol.weight = ExtWeight::finite(static_cast<std::int64_t>(dom.size()));
      sol.vertices = dom;
      std::cout << serialize_solution(sol);
      return kExitOk;
    }
    case ProblemKind::hp: {
      if (!exact) throw std::invalid_argument("no approx method for hp");
      bool found = has_hamiltonian_path(inst.graph, guard_or(kDefaultHamiltonianGuard));
      std::cout << "hamiltonian-path " << (found ? "yes" : "no") << '\n';
      return found ? kExitOk : kExitInfeasible;
    }
    case ProblemKind::sc: {
      SolveOutcome<CoverSelection> out =
          exact ? exact_set_cover(inst.sets, guard_or(kDefaultSetCoverGuard))
                : greedy_set_cover(inst.sets);
      if (!out.is_feasible()) {
        std::cout << "infeasible\n";
        return kExitInfeasible;
      }
      SolutionFile sol;
      sol.kind = SolutionFile::Kind::cover;
      sol.weight = out.weight();
      sol.cover = out.solution();
      std::cout << serialize_solution(sol);
      return kExitOk;
    }
  }
  return kExitInputError;
}

struct ReduceArgs {
  std::string from;
  std::string to;
  std::string file;
  std::string out;
  std::string sidecar;
  int center = -1;
};

int run_reduce(const ReduceArgs& args) {
  using namespace domtree;
  ProblemKind from = parse_kind(args.from);
  ProblemKind to = parse_kind(args.to);
  Instance inst = parse_instance(read_file(args.file));
  if (inst.kind != from)
    throw std::invalid_argument("instance file is '" + to_string(inst.kind) +
                                "', not '" + args.from + "'");

  std::string stem = args.file;
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  std::string out_path = args.out.empty() ? stem + "." + args.to + ".inst" : args.out;
  std::string sidecar_path = args.sidecar.empty() ? out_path + ".map" : args.sidecar;

  Instance reduced;
  Sidecar side;
  if (from == ProblemKind::mdt && to == ProblemKind::gst) {
    MdtToGstArtifact art = reduce_mdt_to_gst(inst.graph);
    reduced.kind = ProblemKind::gst;
    reduced.scale = inst.scale;
    reduced.graph = art.source;
    reduced.groups = art.groups;
    side = sidecar_of(art);
  } else if (from == ProblemKind::gst && to == ProblemKind::mdt) {
    GstToMdtArtifact art = reduce_gst_to_mdt(inst.graph, inst.groups);
    reduced.kind = ProblemKind::mdt;
    reduced.scale = inst.scale;
    reduced.graph = art.output;
    side = sidecar_of(art);
  } else if (from == ProblemKind::dom && to == ProblemKind::mds) {
    DomToMdsArtifact art = reduce_dom_to_mds(inst.graph);
    reduced.kind = ProblemKind::mds;
    reduced.graph = art.output;
    side = sidecar_of(art);
  } else if (from == ProblemKind::mds && to == ProblemKind::sc) {
    if (args.center < 0)
      throw std::invalid_argument("mds -> sc needs --center");
    MdsToScArtifact art = reduce_mds_to_sc(inst.graph, args.center);
    reduced.kind = ProblemKind::sc;
    reduced.scale = inst.scale;
    reduced.sets = art.output;
    side = sidecar_of(art);
  } else if (from == ProblemKind::hp && to == ProblemKind::mdp) {
    HpToMdpArtifact art = reduce_hp_to_mdp(inst.graph);
    reduced.kind = ProblemKind::mdp;
    reduced.graph = art.output;
    side = sidecar_of(art);
  } else {
    throw std::invalid_argument("unsupported reduction " + args.from + " -> " + args.to);
  }

  write_file(out_path, serialize_instance(reduced));
  write_file(sidecar_path, serialize_sidecar(side));
  return kExitOk;
}

struct LiftArgs {
  std::string sidecar;
  std::string solution;
  std::string source;
  std::string out;
};

int verify_lifted(const domtree::Instance& src, const domtree::Sidecar& side,
                  const domtree::SolutionFile& lifted) {
  using namespace domtree;
  switch (side.from) {
    case ProblemKind::mdt:
    case ProblemKind::gst:
    case ProblemKind::mds: {
      SubgraphSolution s = subgraph_solution_of(lifted);
      ValidationReport report =
          side.from == ProblemKind::gst
              ? validate_gst_report(src.graph, src.groups, s)
              : validate_solution_report(src.graph, s,
                                         side.from == ProblemKind::mdt ? Problem::mdt
                                                                       : Problem::mds);
      if (!report.ok()) {
        std::cerr << "lifted solution invalid: " << report.detail << '\n';
        return kExitInfeasible;
      }
      return kExitOk;
    }
    case ProblemKind::dom:
      if (!dominates(src.graph, lifted.vertices)) {
        std::cerr << "lifted set does not dominate the source\n";
        return kExitInfeasible;
      }
      return kExitOk;
    case ProblemKind::hp: {
      SubgraphSolution s = subgraph_solution_of(lifted);
      if (static_cast<int>(s.vertices.size()) != src.graph.vertex_count()) {
        std::cerr << "lifted path does not span the source\n";
        return kExitInfeasible;
      }
      return kExitOk;
    }
    default:
      throw std::invalid_argument("no verification for this lift");
  }
}

int run_lift(const LiftArgs& args) {
  using namespace domtree;
  Sidecar side = parse_sidecar(read_file(args.sidecar));
  SolutionFile sol = parse_solution(read_file(args.solution));
  SolutionFile lifted = lift_via_sidecar(side, sol);
  std::string text = serialize_solution(lifted);
  if (args.out.empty())
    std::cout << text;
  else
    write_file(args.out, text);
  if (!args.source.empty()) {
    Instance src = parse_instance(read_file(args.source));
    if (src.kind != side.from)
      throw std::invalid_argument("source file kind does not match the sidecar");
    return verify_lifted(src, side, lifted);
  }
  return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  using namespace domtree;
  Instance inst = parse_instance(read_file(instance_path));
  SolutionFile sol = parse_solution(read_file(solution_path));

  auto report_result = [](const ValidationReport& report, ExtWeight weight) {
    if (report.ok()) {
      std::cout << "valid weight " << weight.to_string() << '\n';
      return kExitOk;
    }
    std::cerr << "invalid: " << report.detail << '\n';
    return kExitInfeasible;
  };

  switch (inst.kind) {
    case ProblemKind::mdt:
    case ProblemKind::mds:
    case ProblemKind::mdp: {
      Problem problem = inst.kind == ProblemKind::mdt   ? Problem::mdt
                        : inst.kind == ProblemKind::mds ? Problem::mds
                                                        : Problem::mdp;
      SubgraphSolution s = subgraph_solution_of(sol);
      return report_result(validate_solution_report(inst.graph, s, problem), s.weight);
    }
    case ProblemKind::gst: {
      SubgraphSolution s = subgraph_solution_of(sol);
      return report_result(validate_gst_report(inst.graph, inst.groups, s), s.weight);
    }
    case ProblemKind::dom: {
      if (sol.kind != SolutionFile::Kind::vertex_set)
        throw std::invalid_argument("dom expects a 'set' solution");
      for (Vertex v : sol.vertices)
        if (v < 0 || v >= inst.graph.vertex_count())
          throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
        if (vertex_set_contains(sol.vertices, v)) continue;
        bool covered = false;
        for (const auto& nb : inst.graph.neighbors(v))
          if (vertex_set_contains(sol.vertices, nb.to)) {
            covered = true;
            break;
          }
        if (!covered) {
          std::cerr << "invalid: vertex " << v << " is not dominated\n";
          return kExitInfeasible;
        }
      }
      std::cout << "valid weight " << sol.vertices.size() << '\n';
      return kExitOk;
    }
    case ProblemKind::hp: {
      // A Hamiltonian-path witness is structural; source weights (and
      // the declared weight field) are irrelevant to the decision.
      if (sol.kind != SolutionFile::Kind::path)
        throw std::invalid_argument("hp expects a 'path' solution");
      SubgraphSolution s;
      try {
        s = make_solution(inst.graph, SolutionKind::path, sol.vertices, sol.edges);
      } catch (const std::exception& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return kExitInfeasible;
      }
      ValidationReport structure = check_structure(inst.graph, s);
      if (!structure.ok()) {
        std::cerr << "invalid: " << structure.detail << '\n';
        return kExitInfeasible;
      }
      if (static_cast<int>(s.vertices.size()) != inst.graph.vertex_count()) {
        std::cerr << "invalid: not a spanning path\n";
        return kExitInfeasible;
      }
      std::cout << "valid spanning path\n";
      return kExitOk;
    }
    case ProblemKind::sc: {
      if (sol.kind != SolutionFile::Kind::cover)
        throw std::invalid_argument("sc expects a 'cover' solution");
      CoverReport report = validate_cover(inst.sets, sol.cover);
      if (!report.ok) {
        std::cerr << "invalid: " << report.detail << '\n';
        return kExitInfeasible;
      }
      std::cout << "valid weight " << report.weight.to_string() << '\n';
      return kExitOk;
    }
  }
  return kExitInputError;
}

struct GenArgs {
  std::string problem;
  std::uint64_t seed = 1;
  int n = 6;
  std::string edge_prob = "1/2";
  std::int64_t weight_max = 10;
  bool connected = false;
  bool min_degree_1 = false;
  int groups = 2;
  std::string group_size = "1:2";
  int universe_max = 10;
  int sets_max = 12;
  std::string out;
};

void parse_fraction(const std::string& text, std::uint32_t& num, std::uint32_t& den) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected a fraction like 1/2, got '" + text + "'");
  num = static_cast<std::uint32_t>(std::stoul(text.substr(0, slash)));
  den = static_cast<std::uint32_t>(std::stoul(text.substr(slash + 1)));
}

int run_gen(const GenArgs& args) {
  using namespace domtree;
  ProblemKind kind = parse_kind(args.problem);
  Instance inst;
  inst.kind = kind;

  if (kind == ProblemKind::sc) {
    ScGenConfig cfg;
    cfg.seed = args.seed;
    cfg.universe_max = args.universe_max;
    cfg.sets_max = args.sets_max;
    cfg.weight_max = args.weight_max;
    inst.sets = gen_set_cover(cfg);
  } else {
    GenConfig cfg;
    cfg.seed = args.seed;
    cfg.n = args.n;
    parse_fraction(args.edge_prob, cfg.edge_prob_num, cfg.edge_prob_den);
    cfg.weight_max = args.weight_max;
    cfg.require_connected = args.connected;
    cfg.require_min_degree_1 = args.min_degree_1;
    auto colon = args.group_size.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected --group-size MIN:MAX");
    cfg.group_size_min = std::stoi(args.group_size.substr(0, colon));
    cfg.group_size_max = std::stoi(args.group_size.substr(colon + 1));
    if (kind == ProblemKind::gst) {
      GstInstance gst = gen_gst_instance(cfg, args.groups);
      inst.graph = gst.graph;
      inst.groups = gst.groups;
    } else {
      inst.graph = gen_graph(cfg);
    }
  }

  std::string text = serialize_instance(inst);
  if (args.out.empty())
    std::cout << text;
  else
    write_file(args.out, text);
  return kExitOk;
}

struct SuiteArgs {
  std::string which;
  std::uint64_t seed = 1;
  int count = 50;
  int n = 7;
  std::string edge_prob = "1/2";
  std::int64_t weight_max = 10;
  bool connected = false;
  bool min_degree_1 = false;
  int groups = 3;
  int universe_max = 10;
  int sets_max = 12;
};

int run_suite(const SuiteArgs& args) {
  using namespace domtree;
  SuiteReport report;
  if (args.which == "ratio" || args.which == "greedy_bound") {
    if (args.which == "ratio") {
      GenConfig cfg;
      cfg.seed = args.seed;
      cfg.n = args.n;
      parse_fraction(args.edge_prob, cfg.edge_prob_num, cfg.edge_prob_den);
      cfg.weight_max = args.weight_max;
      cfg.require_connected = args.connected;
      cfg.require_min_degree_1 = args.min_degree_1;
      report = run_ratio_suite(cfg, args.count);
    } else {
      ScGenConfig cfg;
      cfg.seed = args.seed;
      cfg.universe_max = args.universe_max;
      cfg.sets_max = args.sets_max;
      cfg.weight_max = args.weight_max;
      report = run_greedy_bound_suite(cfg, args.count);
    }
  } else {
    SuiteKind kind;
    if (!suite_kind_from(args.which, kind))
      throw std::invalid_argument("unknown suite '" + args.which + "'");
    GenConfig cfg;
    cfg.seed = args.seed;
    cfg.n = args.n;
    parse_fraction(args.edge_prob, cfg.edge_prob_num, cfg.edge_prob_den);
    cfg.weight_max = args.weight_max;
    cfg.require_connected = args.connected;
    cfg.require_min_degree_1 = args.min_degree_1;
    cfg.group_count = args.groups;
    report = run_equivalence_suite(kind, cfg, args.count);
  }
  std::cout << to_text(report);
  std::cout << summary_json(report) << '\n';
  if (report.aborted) return kExitGuard;
  return report.violations == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating tree / group Steiner reduction toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance exactly or approximately");
  solve->add_option("--problem", solve_args.problem, "mdt|gst|mds|mdp|dom|hp|sc")
      ->required();
  solve->add_option("--method", solve_args.method, "exact|approx");
  solve->add_option("file", solve_args.file, "instance file")->required();
  std::size_t guard_value = 0;
  auto* guard_opt = solve->add_option("--guard", guard_value, "override the size guard");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "produce a reduced instance plus sidecar");
  reduce->add_option("--from", reduce_args.from, "source problem kind")->required();
  reduce->add_option("--to", reduce_args.to, "target problem kind")->required();
  reduce->add_option("file", reduce_args.file, "instance file")->required();
  reduce->add_option("-o,--out", reduce_args.out, "reduced instance path");
  reduce->add_option("--sidecar", reduce_args.sidecar, "sidecar map path");
  reduce->add_option("--center", reduce_args.center, "star center (mds -> sc)");

  LiftArgs lift_args;
  auto* lift = app.add_subcommand("lift", "lift a reduced-instance solution back");
  lift->add_option("--sidecar", lift_args.sidecar, "sidecar map path")->required();
  lift->add_option("--solution", lift_args.solution, "solution file")->required();
  lift->add_option("--source", lift_args.source, "source instance to verify against");
  lift->add_option("-o,--out", lift_args.out, "lifted solution path");

  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("file", verify_instance, "instance file")->required();
  verify->add_option("solution", verify_solution, "solution file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--problem", gen_args.problem, "instance kind")->required();
  gen->add_option("--seed", gen_args.seed, "64-bit seed")->required();
  gen->add_option("--n", gen_args.n, "vertex count");
  gen->add_option("--edge-prob", gen_args.edge_prob, "edge probability NUM/DEN");
  gen->add_option("--weight-max", gen_args.weight_max, "weights are 1..weight-max");
  gen->add_flag("--connected", gen_args.connected, "reject disconnected graphs");
  gen->add_flag("--min-degree-1", gen_args.min_degree_1, "reject isolated vertices");
  gen->add_option("--groups", gen_args.groups, "group count (gst)");
  gen->add_option("--group-size", gen_args.group_size, "group size MIN:MAX (gst)");
  gen->add_option("--universe-max", gen_args.universe_max, "universe bound (sc)");
  gen->add_option("--sets-max", gen_args.sets_max, "set count bound (sc)");
  gen->add_option("-o,--out", gen_args.out, "output path (default stdout)");

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "run an equivalence or ratio suite");
  suite->add_option("--which", suite_args.which,
                    "mdt_gst|gst_mdt|dom_mds|mds_sc|hp_mdp|ratio|greedy_bound")
      ->required();
  suite->add_option("--seed", suite_args.seed, "64-bit seed")->required();
  suite->add_option("--count", suite_args.count, "instance count");
  suite->add_option("--n", suite_args.n, "max vertex count (instances cycle 2..n)");
  suite->add_option("--edge-prob", suite_args.edge_prob, "edge probability NUM/DEN");
  suite->add_option("--weight-max", suite_args.weight_max, "weights are 1..weight-max");
  suite->add_flag("--connected", suite_args.connected, "generate connected graphs");
  suite->add_flag("--min-degree-1", suite_args.min_degree_1, "generate min degree 1");
  suite->add_option("--groups", suite_args.groups, "max group count (gst_mdt)");
  suite->add_option("--universe-max", suite_args.universe_max, "universe bound");
  suite->add_option("--sets-max", suite_args.sets_max, "set count bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) {
      if (*guard_opt) solve_args.guard = guard_value;
      return run_solve(solve_args);
    }
    if (*reduce) return run_reduce(reduce_args);
    if (*lift) return run_lift(lift_args);
    if (*verify) return run_verify(verify_instance, verify_solution);
    if (*gen) return run_gen(gen_args);
    if (*suite) return run_suite(suite_args);
  } catch (const domtree::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
