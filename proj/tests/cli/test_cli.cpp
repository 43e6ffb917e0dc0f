#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the command-line surface: every subcommand, the
// documented exit codes, and the reduce/solve/lift/verify chains that
// must reproduce source oracle weights for all five reductions.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const std::string& workdir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/domtree-cli-XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    return std::string(tmpl);
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const std::string out_path = workdir() + "/stdout.txt";
  const std::string err_path = workdir() + "/stderr.txt";
  std::string command = std::string(DOMTREE_CLI_PATH) + " " + args + " > " + out_path +
                        " 2> " + err_path;
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string path_of(const std::string& name) { return workdir() + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve mds exactly and approximately on a five-path") {
  spit(path_of("p5.inst"),
       "p mds 5 4 1\n"
       "e 0 1 1\n"
       "e 1 2 1\n"
       "e 2 3 1\n"
       "e 3 4 1\n");
  RunResult exact = run("solve --problem mds --method exact " + path_of("p5.inst"));
  CHECK(exact.exit_code == 0);
  CHECK(exact.out ==
        "sol star 2\n"
        "v 1 2 3\n"
        "e 1 2\n"
        "e 2 3\n");

  RunResult approx = run("solve --problem mds --method approx " + path_of("p5.inst"));
  CHECK(approx.exit_code == 0);
  CHECK(approx.out == exact.out);

  SUBCASE("exact output is stable across runs") {
    RunResult again = run("solve --problem mds --method exact " + path_of("p5.inst"));
    CHECK(again.out == exact.out);
  }
}

TEST_CASE("exit codes") {
  SUBCASE("infeasible solve exits 1") {
    spit(path_of("p7.inst"),
         "p mds 7 6 1\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 5 6 1\n");
    RunResult r = run("solve --problem mds " + path_of("p7.inst"));
    CHECK(r.exit_code == 1);
    CHECK(r.out == "infeasible\n");
  }
  SUBCASE("parse errors exit 2 with a diagnostic") {
    spit(path_of("bad.inst"), "p mdt 2 1 1\ne 0 0 1\n");
    RunResult r = run("solve --problem mdt " + path_of("bad.inst"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("self-loop") != std::string::npos);
  }
  SUBCASE("missing file exits 2") {
    RunResult r = run("solve --problem mdt " + path_of("nope.inst"));
    CHECK(r.exit_code == 2);
  }
  SUBCASE("kind mismatch exits 2") {
    spit(path_of("k2.inst"), "p mdt 2 1 1\ne 0 1 5\n");
    RunResult r = run("solve --problem gst " + path_of("k2.inst"));
    CHECK(r.exit_code == 2);
  }
  SUBCASE("guard overruns exit 3") {
    spit(path_of("wide.inst"), "p mdt 70 0 1\n");
    RunResult r = run("solve --problem mdt " + path_of("wide.inst"));
    CHECK(r.exit_code == 3);
    // The subset oracles top out at 64 vertices no matter the guard.
    RunResult widened = run("solve --problem mdt --guard 100 " + path_of("wide.inst"));
    CHECK(widened.exit_code == 3);
  }
}

TEST_CASE("verify names the undominated vertex") {
  spit(path_of("p5v.inst"),
       "p mds 5 4 1\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\n");
  spit(path_of("bad-star.sol"),
       "sol star 1\n"
       "v 0 1\n"
       "e 0 1\n");
  RunResult r = run("verify " + path_of("p5v.inst") + " " + path_of("bad-star.sol"));
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("vertex 3 is not dominated") != std::string::npos);

  spit(path_of("good-star.sol"),
       "sol star 2\n"
       "v 1 2 3\n"
       "e 1 2\n"
       "e 2 3\n");
  RunResult ok = run("verify " + path_of("p5v.inst") + " " + path_of("good-star.sol"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "valid weight 2\n");
}

TEST_CASE("gen produces parseable deterministic instances") {
  RunResult a = run("gen --problem mdt --seed 11 --n 6 -o " + path_of("a.inst"));
  CHECK(a.exit_code == 0);
  RunResult b = run("gen --problem mdt --seed 11 --n 6 -o " + path_of("b.inst"));
  CHECK(b.exit_code == 0);
  CHECK(slurp(path_of("a.inst")) == slurp(path_of("b.inst")));
  CHECK_FALSE(slurp(path_of("a.inst")).empty());

  RunResult solve = run("solve --problem mdt " + path_of("a.inst"));
  CHECK((solve.exit_code == 0 || solve.exit_code == 1));

  RunResult gst = run("gen --problem gst --seed 3 --n 5 --groups 2 -o " +
                      path_of("g.inst"));
  CHECK(gst.exit_code == 0);
  RunResult sc = run("gen --problem sc --seed 3 -o " + path_of("s.inst"));
  CHECK(sc.exit_code == 0);
}

TEST_CASE("reduce, solve, lift and verify chain for every reduction") {
  SUBCASE("hamiltonian path through dominating path") {
    spit(path_of("k3.inst"), "p hp 3 3 1\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
    RunResult red = run("reduce --from hp --to mdp " + path_of("k3.inst") + " -o " +
                        path_of("k3.mdp.inst") + " --sidecar " + path_of("k3.map"));
    REQUIRE(red.exit_code == 0);

    RunResult solve = run("solve --problem mdp " + path_of("k3.mdp.inst"));
    REQUIRE(solve.exit_code == 0);
    CHECK(solve.out.find("sol path 0\n") == 0);
    spit(path_of("k3.sol"), solve.out);

    RunResult lift = run("lift --sidecar " + path_of("k3.map") + " --solution " +
                         path_of("k3.sol") + " --source " + path_of("k3.inst"));
    CHECK(lift.exit_code == 0);
    CHECK(lift.out.find("sol path 0") == 0);

    spit(path_of("k3.lifted.sol"), lift.out);
    RunResult verify = run("verify " + path_of("k3.inst") + " " + path_of("k3.lifted.sol"));
    CHECK(verify.exit_code == 0);
  }

  SUBCASE("domination as group hitting") {
    spit(path_of("p4.inst"), "p mdt 4 3 1\ne 0 1 1\ne 1 2 2\ne 2 3 3\n");
    RunResult src = run("solve --problem mdt " + path_of("p4.inst"));
    REQUIRE(src.exit_code == 0);
    CHECK(src.out.find("sol tree 2\n") == 0);

    RunResult red = run("reduce --from mdt --to gst " + path_of("p4.inst") + " -o " +
                        path_of("p4.gst.inst") + " --sidecar " + path_of("p4.map"));
    REQUIRE(red.exit_code == 0);
    RunResult gst = run("solve --problem gst " + path_of("p4.gst.inst"));
    REQUIRE(gst.exit_code == 0);
    CHECK(gst.out.find("sol tree 2\n") == 0);

    spit(path_of("p4.gst.sol"), gst.out);
    RunResult lift = run("lift --sidecar " + path_of("p4.map") + " --solution " +
                         path_of("p4.gst.sol") + " --source " + path_of("p4.inst") +
                         " -o " + path_of("p4.lifted.sol"));
    CHECK(lift.exit_code == 0);
    RunResult verify = run("verify " + path_of("p4.inst") + " " + path_of("p4.lifted.sol"));
    CHECK(verify.exit_code == 0);
    CHECK(verify.out == "valid weight 2\n");
  }

  SUBCASE("group hitting as domination") {
    spit(path_of("c5.gst.inst"),
         "p gst 5 5 1\n"
         "e 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n"
         "g 0 1\ng 0 4\ng 2 3\n");
    RunResult src = run("solve --problem gst " + path_of("c5.gst.inst"));
    REQUIRE(src.exit_code == 0);
    CHECK(src.out.find("sol tree 2\n") == 0);

    RunResult red = run("reduce --from gst --to mdt " + path_of("c5.gst.inst") +
                        " -o " + path_of("c5.mdt.inst") + " --sidecar " +
                        path_of("c5.map"));
    REQUIRE(red.exit_code == 0);
    RunResult mdt = run("solve --problem mdt " + path_of("c5.mdt.inst"));
    REQUIRE(mdt.exit_code == 0);
    CHECK(mdt.out.find("sol tree 2\n") == 0);

    spit(path_of("c5.mdt.sol"), mdt.out);
    RunResult lift = run("lift --sidecar " + path_of("c5.map") + " --solution " +
                         path_of("c5.mdt.sol") + " --source " + path_of("c5.gst.inst"));
    CHECK(lift.exit_code == 0);
    CHECK(lift.out.find("sol tree 2\n") == 0);
  }

  SUBCASE("dominating set as dominating star") {
    spit(path_of("c5.dom.inst"),
         "p dom 5 5 1\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n");
    RunResult src = run("solve --problem dom " + path_of("c5.dom.inst"));
    REQUIRE(src.exit_code == 0);
    CHECK(src.out.find("sol set 2\n") == 0);

    RunResult red = run("reduce --from dom --to mds " + path_of("c5.dom.inst") +
                        " -o " + path_of("c5.mds.inst") + " --sidecar " +
                        path_of("c5.dom.map"));
    REQUIRE(red.exit_code == 0);
    RunResult mds = run("solve --problem mds " + path_of("c5.mds.inst"));
    REQUIRE(mds.exit_code == 0);
    CHECK(mds.out.find("sol star 2\n") == 0);

    spit(path_of("c5.mds.sol"), mds.out);
    RunResult lift = run("lift --sidecar " + path_of("c5.dom.map") + " --solution " +
                         path_of("c5.mds.sol") + " --source " + path_of("c5.dom.inst"));
    CHECK(lift.exit_code == 0);
    CHECK(lift.out.find("sol set 2\n") == 0);

    spit(path_of("c5.dom.sol"), lift.out);
    RunResult verify = run("verify " + path_of("c5.dom.inst") + " " + path_of("c5.dom.sol"));
    CHECK(verify.exit_code == 0);
  }

  SUBCASE("dominating star as set cover") {
    spit(path_of("p5c.inst"),
         "p mds 5 4 1\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\n");
    RunResult red = run("reduce --from mds --to sc --center 2 " + path_of("p5c.inst") +
                        " -o " + path_of("p5c.sc.inst") + " --sidecar " +
                        path_of("p5c.map"));
    REQUIRE(red.exit_code == 0);
    RunResult sc = run("solve --problem sc " + path_of("p5c.sc.inst"));
    REQUIRE(sc.exit_code == 0);
    CHECK(sc.out.find("sol cover 2\n") == 0);

    spit(path_of("p5c.sc.sol"), sc.out);
    RunResult lift = run("lift --sidecar " + path_of("p5c.map") + " --solution " +
                         path_of("p5c.sc.sol") + " --source " + path_of("p5c.inst"));
    CHECK(lift.exit_code == 0);
    CHECK(lift.out ==
          "sol star 2\n"
          "v 1 2 3\n"
          "e 1 2\n"
          "e 2 3\n");

    RunResult missing_center = run("reduce --from mds --to sc " + path_of("p5c.inst"));
    CHECK(missing_center.exit_code == 2);
  }
}

TEST_CASE("hp solve reports the decision in the exit code") {
  spit(path_of("claw.inst"), "p hp 4 3 1\ne 0 1 1\ne 0 2 1\ne 0 3 1\n");
  RunResult no = run("solve --problem hp " + path_of("claw.inst"));
  CHECK(no.exit_code == 1);
  CHECK(no.out == "hamiltonian-path no\n");

  spit(path_of("p4hp.inst"), "p hp 4 3 1\ne 0 1 1\ne 1 2 1\ne 2 3 1\n");
  RunResult yes = run("solve --problem hp " + path_of("p4hp.inst"));
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "hamiltonian-path yes\n");
}

TEST_CASE("suite subcommand prints a report and a summary line") {
  RunResult r = run("suite --which hp_mdp --seed 5 --count 8 --n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite hp_mdp seed 5 count 8\n") == 0);
  CHECK(r.out.find("\"suite\":\"hp_mdp\"") != std::string::npos);
  CHECK(r.out.find("\"violations\":0") != std::string::npos);

  RunResult again = run("suite --which hp_mdp --seed 5 --count 8 --n 5");
  CHECK(again.out == r.out);  // byte-identical reruns

  RunResult ratio = run("suite --which ratio --seed 5 --count 6 --n 5");
  CHECK(ratio.exit_code == 0);
  RunResult greedy = run("suite --which greedy_bound --seed 5 --count 20");
  CHECK(greedy.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  RunResult r = run("solve --problem mdt");
  CHECK(r.exit_code == 2);
  RunResult unknown = run("frobnicate");
  CHECK(unknown.exit_code == 2);
}

}
