#include <doctest.h>

#include "domtree/harness.hpp"
#include "domtree/io.hpp"

using namespace domtree;

TEST_SUITE("harness") {

TEST_CASE("generation is a pure function of the config") {
  GenConfig cfg;
  cfg.seed = 123456789;
  cfg.n = 7;
  WeightedGraph a = gen_graph(cfg);
  WeightedGraph b = gen_graph(cfg);
  CHECK(a == b);

  cfg.seed += 1;
  CHECK_FALSE(gen_graph(cfg) == a);
}

TEST_CASE("degenerate configs") {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.n = 1;
  cfg.edge_prob_num = 0;
  cfg.edge_prob_den = 1;
  WeightedGraph g = gen_graph(cfg);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);

  CHECK_THROWS_AS([] {
    GenConfig bad;
    bad.n = 0;
    return gen_graph(bad);
  }(), std::invalid_argument);
}

TEST_CASE("flags are honored by rejection sampling") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 6;
    cfg.edge_prob_num = 1;
    cfg.edge_prob_den = 3;
    cfg.require_connected = true;
    WeightedGraph g = gen_graph(cfg);
    VertexSet all;
    for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    CHECK(is_connected_induced(g, all));
  }

  SUBCASE("unsatisfiable flags give up loudly") {
    GenConfig cfg;
    cfg.n = 2;
    cfg.edge_prob_num = 0;
    cfg.edge_prob_den = 1;
    cfg.require_connected = true;
    CHECK_THROWS_AS(gen_graph(cfg), std::runtime_error);
  }
}

TEST_CASE("gst and set-cover generation are deterministic too") {
  GenConfig cfg;
  cfg.seed = 777;
  cfg.n = 5;
  GstInstance a = gen_gst_instance(cfg, 3);
  GstInstance b = gen_gst_instance(cfg, 3);
  CHECK(a.graph == b.graph);
  CHECK(a.groups == b.groups);
  CHECK(a.groups.size() == 3);

  ScGenConfig sc;
  sc.seed = 777;
  CHECK(gen_set_cover(sc) == gen_set_cover(sc));
  SetCoverInstance inst = gen_set_cover(sc);
  CHECK(inst.universe_size() <= 10);
  CHECK(inst.set_count() <= 12);
}

TEST_CASE("equivalence suites run clean on seeded corpora") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.n = 6;

  SUBCASE("mdt_gst") {
    GenConfig c = cfg;
    c.require_connected = true;
    SuiteReport report = run_equivalence_suite(SuiteKind::mdt_gst, c, 20);
    CHECK(report.violations == 0);
    CHECK_FALSE(report.aborted);
    CHECK(report.records.size() == 20);
  }
  SUBCASE("gst_mdt") {
    GenConfig c = cfg;
    c.n = 5;
    c.group_count = 3;
    SuiteReport report = run_equivalence_suite(SuiteKind::gst_mdt, c, 20);
    CHECK(report.violations == 0);
  }
  SUBCASE("dom_mds") {
    GenConfig c = cfg;
    c.require_min_degree_1 = true;
    SuiteReport report = run_equivalence_suite(SuiteKind::dom_mds, c, 20);
    CHECK(report.violations == 0);
    CHECK(report.skipped == 0);
  }
  SUBCASE("mds_sc") {
    SuiteReport report = run_equivalence_suite(SuiteKind::mds_sc, cfg, 15);
    CHECK(report.violations == 0);
  }
  SUBCASE("hp_mdp") {
    GenConfig c = cfg;
    c.n = 5;
    SuiteReport report = run_equivalence_suite(SuiteKind::hp_mdp, c, 20);
    CHECK(report.violations == 0);
  }
}

TEST_CASE("isolated vertices are skipped, not failed, in dom_mds") {
  GenConfig cfg;
  cfg.seed = 9;
  cfg.n = 3;
  cfg.edge_prob_num = 0;
  cfg.edge_prob_den = 1;
  SuiteReport report = run_equivalence_suite(SuiteKind::dom_mds, cfg, 3);
  CHECK(report.violations == 0);
  CHECK(report.skipped == 3);
  for (const InstanceRecord& rec : report.records) CHECK(rec.status == "skipped");
}

TEST_CASE("suite reports are byte-identical across runs") {
  GenConfig cfg;
  cfg.seed = 31337;
  cfg.n = 5;
  SuiteReport a = run_equivalence_suite(SuiteKind::hp_mdp, cfg, 10);
  SuiteReport b = run_equivalence_suite(SuiteKind::hp_mdp, cfg, 10);
  CHECK(to_text(a) == to_text(b));
  CHECK(summary_json(a) == summary_json(b));

  SuiteReport r1 = run_ratio_suite(cfg, 10);
  SuiteReport r2 = run_ratio_suite(cfg, 10);
  CHECK(to_text(r1) == to_text(r2));
}

TEST_CASE("summary json carries the fixed fields") {
  GenConfig cfg;
  cfg.seed = 7;
  cfg.n = 4;
  SuiteReport report = run_equivalence_suite(SuiteKind::hp_mdp, cfg, 3);
  std::string json = summary_json(report);
  CHECK(json.find("\"suite\":\"hp_mdp\"") != std::string::npos);
  CHECK(json.find("\"seed\":7") != std::string::npos);
  CHECK(json.find("\"count\":3") != std::string::npos);
  CHECK(json.find("\"violations\":0") != std::string::npos);
  CHECK(json.find("\"worst_ratio\":") != std::string::npos);
}

TEST_CASE("ratio suite asserts the harmonic bound and logs the worst ratio") {
  GenConfig cfg;
  cfg.seed = 2024;
  cfg.n = 6;
  SuiteReport report = run_ratio_suite(cfg, 25);
  CHECK(report.violations == 0);
  CHECK_FALSE(report.aborted);
  // worst_ratio may be absent if every optimum was 0, but not here.
  CHECK(report.worst_ratio.has_value());
  CHECK(Ratio{1, 1} <= *report.worst_ratio);
}

TEST_CASE("greedy bound suite runs clean") {
  ScGenConfig cfg;
  cfg.seed = 555;
  SuiteReport report = run_greedy_bound_suite(cfg, 50);
  CHECK(report.violations == 0);
  CHECK(report.records.size() == 50);
}

TEST_CASE("guard overruns abort with a partial report") {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.n = 8;  // instance 6 reduces to 16 vertices, past the path guard
  SuiteReport report = run_equivalence_suite(SuiteKind::hp_mdp, cfg, 10);
  CHECK(report.aborted);
  REQUIRE(report.records.size() == 7);
  CHECK(report.records.back().status == "aborted");
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

}
