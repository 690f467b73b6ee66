#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "thinpath/io.hpp"

namespace fs = std::filesystem;
using thinpath::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = thinpath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "thinpath_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact on the TSBA family") {
  const auto fam = run({"gen", "family", "--family", "tsba_worst", "--k", "3"});
  REQUIRE(fam.code == 0);
  const auto path = write("tw3.json", fam.out);
  const auto r = run({"solve", "--alg", "exact", path});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["width"] == 6);
  CHECK(json::parse(run({"solve", "--alg", "tsba", path}).out)["width"] == 10);
  CHECK(json::parse(run({"solve", "--alg", "spba", "--tie-break", "reverse", path}).out)["width"] == 6);
  CHECK(json::parse(run({"solve", "--alg", "exact", "--no-prune", path}).out)["width"] == 6);
}

TEST_CASE("nbi refuses non-line instances") {
  const auto g = run({"gen", "random", "--n", "8"});
  REQUIRE(g.code == 0);
  const auto r = run({"solve", "--alg", "nbi", write("r8.json", g.out)});
  CHECK(r.code == 1);
  CHECK(r.err.find("nbi requires 1-D instance") != std::string::npos);
  const auto h = run({"gen", "family", "--family", "spba_worst", "--k", "3"});
  CHECK(run({"solve", "--alg", "nbi", write("sw3.json", h.out)}).code == 1);
}

TEST_CASE("nbi on line and 1-D geometric instances") {
  const auto line = run({"gen", "line", "--n", "8", "--model", "disk", "--seed", "4"});
  REQUIRE(line.code == 0);
  const auto path = write("line.json", line.out);
  const auto a = json::parse(run({"solve", "--alg", "nbi", path}).out);
  const auto b = json::parse(run({"solve", "--alg", "exact", path}).out);
  CHECK(a["width"] == b["width"]);

  const auto geo = write("geo1.json", R"({"dim": 1, "points": [[0], [1], [2], [3]], "rmin": [0, 0, 0, 0],
    "rmax": [1.5, 1, 1, 1], "source": 0, "target": 3, "eves": [], "model": "disk_hypergraph"})");
  const auto c = run({"solve", "--alg", "nbi", geo});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["width"] == json::parse(run({"solve", "--alg", "exact", geo}).out)["width"]);
}

TEST_CASE("experiment output is reproducible") {
  const std::vector<std::string> args{"experiment", "--n", "8", "--n", "10", "--trials", "30", "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,mean_spba,mean_tsba,completed,skipped_unreachable,skipped_budget,reference\n", 0) == 0);
  const auto out = (scratch() / "exp.csv").string();
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", out});
  CHECK(run(with_out).code == 0);
  CHECK(slurp(out) == a.out);
  CHECK(run({"experiment", "--trials", "3"}).code == 1);
}

TEST_CASE("input errors exit 1 with a field name") {
  const auto bad = write("bad.json", R"({"n": 3, "edges": [{"src": 0}], "source": 0, "target": 2})");
  const auto r = run({"solve", "--alg", "spba", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("edges[0].dst") != std::string::npos);
  CHECK(run({"solve", "--alg", "spba", write("broken.json", "{")}).code == 1);
  CHECK(run({"solve", "--alg", "magic", bad}).code == 1);
  CHECK(run({"solve", "--alg", "spba", (scratch() / "missing.json").string()}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget exhaustion exits 2") {
  const auto fam = run({"gen", "family", "--family", "tsba_worst", "--k", "6"});
  const auto path = write("tw6.json", fam.out);
  CHECK(run({"solve", "--alg", "exact", "--budget", "3", path}).code == 2);
  const auto v = run({"verify", "--budget", "3", path});
  CHECK(v.code == 2);
  CHECK(json::parse(v.out)["complete"] == false);
}

TEST_CASE("verify") {
  const auto g = run({"gen", "random", "--n", "8", "--seed", "2", "--trial", "1"});
  const auto r = run({"verify", write("v8.json", g.out)});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["complete"] == true);
  CHECK(j["spba_bound"] == doctest::Approx(2.0));
}

TEST_CASE("reduce-mds") {
  const auto p4 = write("p4.txt", "0 1\n1 2\n2 3\n");
  const auto r = run({"reduce-mds", p4, "--ns", "5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["expected"]["mds"] == 2);
  CHECK(j["expected"]["width"] == 15);
  const auto inst = write("p4red.json", r.out);
  CHECK(json::parse(run({"solve", "--alg", "exact", inst}).out)["width"] == 15);
  const auto d = json::parse(run({"reduce-mds", p4}).out);
  CHECK(d["n_s"] == 6);
  CHECK(run({"reduce-mds", write("loop.txt", "1 1\n")}).code == 1);
}

TEST_CASE("family writes an expected-values side file") {
  const auto out = (scratch() / "fig5.json").string();
  REQUIRE(run({"family", "--family", "fig5_fixture", "--out", out}).code == 0);
  const auto expected = json::parse(slurp(scratch() / "fig5.expected.json"));
  CHECK(expected["opt_width"] == 7);
  CHECK(expected["approx_width"] == 10);
  CHECK(json::parse(run({"solve", "--alg", "spba", out}).out)["width"] == 7);
  const auto both = json::parse(run({"family", "--family", "spba_worst", "--k", "4"}).out);
  CHECK(both["expected"]["k_prime"] == 9);
  CHECK(run({"family", "--family", "nonsense"}).code == 1);
}

TEST_CASE("gen is deterministic") {
  CHECK(run({"gen", "random", "--n", "12", "--seed", "5"}).out == run({"gen", "random", "--n", "12", "--seed", "5"}).out);
  const auto j = json::parse(run({"gen", "random", "--n", "12", "--seed", "5"}).out);
  CHECK(j["meta"]["st_rule"] == "max_distance");
  CHECK(run({"gen", "line", "--model", "cone"}).code == 1);
  CHECK(run({"solve", "--alg", "tsba", "--tie-break", "adversarial_oracle",
             write("one.json", R"({"n": 2, "edges": [{"src": 0, "dst": [1]}], "source": 0, "target": 1})")})
            .code == 1);
}
