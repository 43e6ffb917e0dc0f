#include <doctest.h>

#include "domtree/errors.hpp"
#include "domtree/harness.hpp"
#include "domtree/io.hpp"
#include "domtree/reductions.hpp"
#include "test_util.hpp"

using namespace domtree;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::path_graph;

TEST_SUITE("io") {

TEST_CASE("parses the two-vertex instance") {
  Instance inst = parse_instance("p mdt 2 1 1\ne 0 1 5\n");
  CHECK(inst.kind == ProblemKind::mdt);
  CHECK(inst.scale == 1);
  CHECK(inst.graph.vertex_count() == 2);
  CHECK(inst.graph.weight(0, 1) == ExtWeight::finite(5));
}

TEST_CASE("serialization is canonical and round-trips") {
  Instance inst;
  inst.kind = ProblemKind::gst;
  inst.scale = 10;
  inst.graph = WeightedGraph(4);
  inst.graph.add_edge(3, 1, ExtWeight::finite(15));
  inst.graph.add_edge(0, 1, ExtWeight::infinity());
  inst.groups.add_group({2, 0});
  inst.groups.add_group({3});

  std::string text = serialize_instance(inst);
  CHECK(text ==
        "p gst 4 2 10\n"
        "e 0 1 inf\n"
        "e 1 3 15\n"
        "g 0 2\n"
        "g 3\n");
  CHECK(parse_instance(text) == inst);
  CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("distinct diagnostics with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), std::string(e.what()));
    }
    return std::make_pair(-1, std::string{});
  };

  SUBCASE("self-loop") {
    auto [line, what] = line_of("p mdt 2 1 1\ne 0 0 1\n");
    CHECK(line == 2);
    CHECK(what.find("self-loop") != std::string::npos);
  }
  SUBCASE("negative weight") {
    auto [line, what] = line_of("p mdt 2 1 1\ne 0 1 -4\n");
    CHECK(line == 2);
    CHECK(what.find("negative weight") != std::string::npos);
  }
  SUBCASE("duplicate edge") {
    auto [line, what] = line_of("p mdt 2 2 1\ne 0 1 1\ne 1 0 2\n");
    CHECK(line == 3);
    CHECK(what.find("duplicate edge") != std::string::npos);
  }
  SUBCASE("out-of-range index") {
    auto [line, what] = line_of("p mdt 2 1 1\ne 0 5 1\n");
    CHECK(line == 2);
    CHECK(what.find("out of range") != std::string::npos);
  }
  SUBCASE("unknown kind") {
    auto [line, what] = line_of("p tsp 2 1 1\ne 0 1 1\n");
    CHECK(line == 1);
    CHECK(what.find("unknown problem kind") != std::string::npos);
  }
  SUBCASE("bad scale") {
    auto [line, what] = line_of("p mdt 2 0 0\n");
    CHECK(line == 1);
    CHECK(what.find("scale") != std::string::npos);
  }
  SUBCASE("edge count mismatch") {
    auto [line, what] = line_of("p mdt 3 2 1\ne 0 1 1\n");
    CHECK(line == 3);
    CHECK(what.find("declares") != std::string::npos);
  }
  SUBCASE("group line outside gst") {
    auto [line, what] = line_of("p mdt 2 1 1\ne 0 1 1\ng 0\n");
    CHECK(line == 3);
    CHECK(what.find("only valid for gst") != std::string::npos);
  }
  SUBCASE("empty group") {
    auto [line, what] = line_of("p gst 2 1 1\ne 0 1 1\ng\n");
    CHECK(line == 3);
    CHECK(what.find("empty group") != std::string::npos);
  }
}

TEST_CASE("set cover instances on the wire") {
  std::string text =
      "p sc 3 2 1\n"
      "s 4 0 1\n"
      "s 2\n";
  Instance inst = parse_instance(text);
  CHECK(inst.kind == ProblemKind::sc);
  CHECK(inst.sets.universe_size() == 3);
  REQUIRE(inst.sets.set_count() == 2);
  CHECK(inst.sets.set(0).elements == VertexSet{0, 1});
  CHECK(inst.sets.set(0).weight == ExtWeight::finite(4));
  CHECK(inst.sets.set(1).elements.empty());
  CHECK(serialize_instance(inst) == text);

  CHECK_THROWS_AS(parse_instance("p sc 3 1 1\ns inf 0\n"), ParseError);
}

TEST_CASE("round-trip on generated corpora") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 2 + static_cast<int>(seed % 7);
    Instance inst;
    inst.kind = ProblemKind::mdt;
    inst.graph = gen_graph(cfg);
    CHECK(parse_instance(serialize_instance(inst)) == inst);

    GstInstance gst = gen_gst_instance(cfg, 1 + static_cast<int>(seed % 3));
    Instance gst_file;
    gst_file.kind = ProblemKind::gst;
    gst_file.graph = gst.graph;
    gst_file.groups = gst.groups;
    CHECK(parse_instance(serialize_instance(gst_file)) == gst_file);

    ScGenConfig sc;
    sc.seed = seed;
    Instance sc_file;
    sc_file.kind = ProblemKind::sc;
    sc_file.sets = gen_set_cover(sc);
    CHECK(parse_instance(serialize_instance(sc_file)) == sc_file);
  }
}

TEST_CASE("solution files round-trip") {
  SolutionFile sol;
  sol.kind = SolutionFile::Kind::star;
  sol.weight = ExtWeight::finite(2);
  sol.vertices = {1, 2, 3};
  sol.edges = {{1, 2}, {2, 3}};
  std::string text = serialize_solution(sol);
  CHECK(text ==
        "sol star 2\n"
        "v 1 2 3\n"
        "e 1 2\n"
        "e 2 3\n");
  CHECK(parse_solution(text) == sol);

  SolutionFile cover;
  cover.kind = SolutionFile::Kind::cover;
  cover.weight = ExtWeight::finite(7);
  cover.cover = {0, 2};
  CHECK(parse_solution(serialize_solution(cover)) == cover);

  CHECK_THROWS_AS(subgraph_solution_of(cover), std::invalid_argument);
  SubgraphSolution star = subgraph_solution_of(sol);
  CHECK(star.kind == SolutionKind::star);
  CHECK(solution_file_of(star) == sol);
}

TEST_CASE("sidecars round-trip for every reduction") {
  WeightedGraph c5 = cycle_graph(5);
  GroupFamily groups;
  groups.add_group({0, 1});
  groups.add_group({2, 3});

  Sidecar a = sidecar_of(reduce_mdt_to_gst(c5));
  Sidecar b = sidecar_of(reduce_gst_to_mdt(c5, groups));
  Sidecar c = sidecar_of(reduce_dom_to_mds(c5));
  Sidecar d = sidecar_of(reduce_mds_to_sc(path_graph(5), 2));
  Sidecar e = sidecar_of(reduce_hp_to_mdp(c5));
  for (const Sidecar& sc : {a, b, c, d, e})
    CHECK(parse_sidecar(serialize_sidecar(sc)) == sc);

  CHECK(b.vertex_map.size() == 7);
  CHECK(b.vertex_map[5].tag == GadgetTag::group);
  CHECK(c.vertex_map[10].tag == GadgetTag::center);
  CHECK(d.center == 2);
  CHECK(d.set_to_leaf == VertexSet{1, 3});
}

TEST_CASE("sidecar lifts are pure index arithmetic") {
  SUBCASE("identity tree lift refuses gadget vertices") {
    WeightedGraph k2 = complete_graph(2, 3);
    GroupFamily one;
    one.add_group({0, 1});
    Sidecar sc = sidecar_of(reduce_gst_to_mdt(k2, one));
    SolutionFile sol;
    sol.kind = SolutionFile::Kind::tree;
    sol.weight = ExtWeight::zero();
    sol.vertices = {2};  // the group gadget
    CHECK_THROWS_AS(lift_via_sidecar(sc, sol), std::invalid_argument);
    sol.vertices = {0};
    CHECK(lift_via_sidecar(sc, sol).vertices == VertexSet{0});
  }

  SUBCASE("star to dominating set") {
    WeightedGraph c5 = cycle_graph(5);
    DomToMdsArtifact art = reduce_dom_to_mds(c5);
    Sidecar sc = sidecar_of(art);
    SolutionFile star;
    star.kind = SolutionFile::Kind::star;
    star.weight = ExtWeight::finite(2);
    star.vertices = {0, 2, art.hub};
    star.edges = {{0, art.hub}, {2, art.hub}};
    SolutionFile lifted = lift_via_sidecar(sc, star);
    CHECK(lifted.kind == SolutionFile::Kind::vertex_set);
    CHECK(lifted.vertices == VertexSet{0, 2});
    CHECK(lifted.weight == ExtWeight::finite(2));
  }

  SUBCASE("cover to star") {
    MdsToScArtifact art = reduce_mds_to_sc(path_graph(5), 2);
    Sidecar sc = sidecar_of(art);
    SolutionFile cover;
    cover.kind = SolutionFile::Kind::cover;
    cover.weight = ExtWeight::finite(2);
    cover.cover = {0, 1};
    SolutionFile lifted = lift_via_sidecar(sc, cover);
    CHECK(lifted.kind == SolutionFile::Kind::star);
    CHECK(lifted.vertices == VertexSet{1, 2, 3});
    CHECK(lifted.edges == std::vector<Edge>{{1, 2}, {2, 3}});
  }

  SUBCASE("positive-weight paths do not witness hamiltonicity") {
    Sidecar sc = sidecar_of(reduce_hp_to_mdp(path_graph(3)));
    SolutionFile path;
    path.kind = SolutionFile::Kind::path;
    path.weight = ExtWeight::finite(1);
    path.vertices = {0, 1, 2};
    path.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(lift_via_sidecar(sc, path), std::invalid_argument);
    path.weight = ExtWeight::zero();
    CHECK(lift_via_sidecar(sc, path).vertices == VertexSet{0, 1, 2});
  }
}

}
