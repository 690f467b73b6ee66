#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "thinpath/errors.hpp"
#include "thinpath/harness.hpp"
#include "thinpath/io.hpp"

using namespace thinpath;
using io::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& msg, const std::string& what) { return msg.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("hypergraph round trip in canonical order") {
  const auto j = io::parse(R"({"n": 4, "edges": [{"src": 2, "dst": [3]}, {"src": 0, "dst": [2, 1]},
                               {"src": 0, "dst": [1]}], "source": 0, "target": 3})");
  const auto inst = io::hypergraph_from_json(j);
  CHECK(inst.hypergraph.edge_count() == 3);
  const json out = io::hypergraph_to_json(inst.hypergraph, inst.source, inst.target);
  CHECK(out["edges"][0]["dst"] == json::array({1}));
  CHECK(out["edges"][1]["dst"] == json::array({1, 2}));
  CHECK(out["edges"][2]["src"] == 2);
  const auto again = io::hypergraph_from_json(io::parse(io::dump(out)));
  CHECK(io::dump(io::hypergraph_to_json(again.hypergraph, again.source, again.target)) == io::dump(out));
  CHECK(io::detect_kind(j) == io::InstanceKind::hypergraph);
}

TEST_CASE("hypergraph errors name the field") {
  CHECK(mentions(error_of([] { io::hypergraph_from_json(io::parse(R"({"n": 2, "source": 0, "target": 1})")); }),
                 "'edges'"));
  CHECK(mentions(error_of([] {
                   io::hypergraph_from_json(io::parse(
                       R"({"n": 2, "edges": [{"src": 0, "dst": [1]}, {"src": 0, "dst": ["x"]}], "source": 0, "target": 1})"));
                 }),
                 "edges[1].dst[0]"));
  CHECK(mentions(error_of([] {
                   io::hypergraph_from_json(
                       io::parse(R"({"n": 2, "edges": [{"src": 5, "dst": [1]}], "source": 0, "target": 1})"));
                 }),
                 "edges[0].src"));
  CHECK(mentions(error_of([] {
                   io::hypergraph_from_json(io::parse(R"({"n": 2, "edges": [{"src": 0, "dst": []}], "source": 0, "target": 1})"));
                 }),
                 "edges[0].dst"));
  CHECK(mentions(error_of([] { io::hypergraph_from_json(io::parse(R"({"n": -1, "edges": [], "source": 0, "target": 1})")); }),
                 "'n'"));
  CHECK(mentions(error_of([] { io::hypergraph_from_json(io::parse(R"({"n": 2, "edges": [], "source": 0, "target": 9})")); }),
                 "'target'"));
  CHECK(mentions(error_of([] { io::parse("{\"n\": 2,"); }), "malformed JSON"));
  CHECK(mentions(error_of([] { io::detect_kind(io::parse("{}")); }), "edges"));
}

TEST_CASE("geometric round trip") {
  harness::ExperimentConfig cfg;
  auto g = harness::gen_random_disk(7, cfg, 2);
  g.eves.push_back({geom::Point{{1.25, 2.5}}, 0.75});
  const std::string text = io::dump(io::geometric_to_json(g));
  const auto back = io::geometric_from_json(io::parse(text));
  CHECK(back.points == g.points);
  CHECK(back.r_max == g.r_max);
  CHECK(back.eves.size() == 1);
  CHECK(back.eves[0].cost == 0.75);
  CHECK(back.model == geom::Model::ring);
  CHECK(io::dump(io::geometric_to_json(back)) == text);
  CHECK(io::detect_kind(io::parse(text)) == io::InstanceKind::geometric);

  json bad = io::parse(text);
  bad["model"] = "hexagon";
  CHECK(mentions(error_of([&] { io::geometric_from_json(bad); }), "'model'"));
  bad = io::parse(text);
  bad["eves"][0].erase("c");
  CHECK(mentions(error_of([&] { io::geometric_from_json(bad); }), "eves[0].c"));
  bad = io::parse(text);
  bad["rmin"] = json::array({0.0});
  CHECK(mentions(error_of([&] { io::geometric_from_json(bad); }), "rmin"));
}

TEST_CASE("line round trip") {
  harness::Rng rng(5);
  for (auto model : {nbi::ReachModel::disk, nbi::ReachModel::interval}) {
    harness::LineGenOptions o;
    o.model = model;
    o.n = 6;
    const auto inst = harness::gen_random_line(o, rng);
    nbi::EveField f{2, {{geom::Point{{0.5, 1.0}}, 2.0}}};
    const json j = io::line_to_json(inst, &f);
    CHECK(io::detect_kind(j) == io::InstanceKind::line);
    const auto back = io::line_from_json(io::parse(io::dump(j)));
    CHECK(back.x == inst.x);
    CHECK(back.radius == inst.radius);
    CHECK(back.ab == inst.ab);
    CHECK(back.source == inst.source);
    const auto eves = io::line_eves_from_json(j);
    REQUIRE(eves);
    CHECK(eves->dim == 2);
    CHECK(eves->eves.size() == 1);
  }
  CHECK_FALSE(io::line_eves_from_json(io::line_to_json(harness::gen_random_line({}, rng))));
  CHECK(mentions(error_of([] {
                   io::line_from_json(io::parse(R"({"x": [0, 1], "reach": {"model": "cone"}, "source": 0, "target": 1})"));
                 }),
                 "reach.model"));
  CHECK(mentions(error_of([] {
                   io::line_from_json(
                       io::parse(R"({"x": [0, 1], "reach": {"model": "interval", "ab": [[1, 1], [2]]}, "source": 0, "target": 1})"));
                 }),
                 "reach.ab[1]"));
}

TEST_CASE("result JSON") {
  SolveResult none;
  const json j = io::result_to_json(none);
  CHECK(j["width"].is_null());
  CHECK(j["edges"].is_null());
  CHECK(j["cover"] == json::array());
  CHECK(j.contains("states"));
  CHECK(j.contains("relaxations"));
}

TEST_CASE("edge lists") {
  std::istringstream p4("# path\n0 1\n1 2\n2 3\n");
  const auto g = io::read_edge_list(p4);
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  std::istringstream isolated("n 4\n");
  CHECK(io::read_edge_list(isolated).n == 4);
  std::istringstream bad("0 1\n1 x\n");
  CHECK(mentions(error_of([&] { io::read_edge_list(bad); }), "line 2"));
  std::istringstream loop("1 1\n");
  CHECK_THROWS_AS(io::read_edge_list(loop), InputError);
}
