#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "thinpath/errors.hpp"
#include "thinpath/harness.hpp"
#include "thinpath/nbi.hpp"
#include "thinpath/solvers.hpp"

using namespace thinpath;
using namespace thinpath::nbi;

namespace {

LineInstance disk(std::vector<double> x, std::vector<double> r, VertexId s, VertexId t) {
  LineInstance inst;
  inst.x = std::move(x);
  inst.radius = std::move(r);
  inst.source = s;
  inst.target = t;
  return inst;
}

LineInstance random_line(harness::Rng& rng, std::size_t n, int trial) {
  harness::LineGenOptions o;
  o.n = n;
  o.lattice = trial % 2 == 1;
  return harness::gen_random_line(o, rng);
}

}  // namespace

TEST_CASE("predecessor") {
  CHECK(predecessor(disk({0, 1, 2}, {1, 1, 1}, 0, 2), 2) == VertexId{1});
  CHECK_FALSE(predecessor(disk({0, 5}, {1, 1}, 0, 1), 1));
  // Coincident coordinates are not strictly left.
  CHECK(predecessor(disk({0, 1, 1}, {2, 2, 2}, 0, 2), 2) == VertexId{0});

  harness::Rng rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_line(rng, 50, trial);
    for (VertexId v = 0; v < inst.size(); ++v) CHECK(predecessor(inst, v) == oracle::predecessor_scan(inst, v));
  }
}

TEST_CASE("validation") {
  auto inst = disk({0, 1}, {1, 1}, 0, 1);
  CHECK_NOTHROW(inst.validate());
  inst.x = {1, 0};
  CHECK_THROWS_AS(inst.validate(), InputError);
  inst = disk({0, 1}, {1}, 0, 1);
  CHECK_THROWS_AS(inst.validate(), InputError);
  inst = disk({0, 1}, {1, 1}, 1, 1);
  CHECK_THROWS_AS(inst.validate(), InputError);

  LineInstance iv;
  iv.model = ReachModel::interval;
  iv.x = {0, 1, 2};
  iv.ab = {{1, 2}, {0.5, 1}, {0, 0}};
  iv.target = 2;
  CHECK_NOTHROW(iv.validate());
  iv.ab[1] = {1, 1};
  CHECK_THROWS_AS(iv.validate(), InputError);
}

TEST_CASE("line hypergraph nests power levels") {
  harness::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_line(rng, 12, trial);
    const auto h = build_line_hypergraph(inst);
    CHECK(check_monotone_nesting(h, false));
    for (VertexId v = 0; v < inst.size(); ++v) {
      if (h.out_edges(v).empty()) continue;
      const auto out = h.out_edges(v);
      const auto& widest = h.edge(*std::max_element(out.begin(), out.end(), [&](EdgeId a, EdgeId b) {
        return h.edge(a).weight() < h.edge(b).weight();
      }));
      for (VertexId u = 0; u < inst.size(); ++u) CHECK(widest.destination_set.contains(u) == inst.reaches(v, u));
    }
  }
}

TEST_CASE("single hop across the whole interval") {
  const auto inst = disk({0, 1, 2, 3, 4, 5}, {4, 0.5, 0.5, 0.5, 0.5, 0.5}, 0, 4);
  const auto r = nbi_solve(inst);
  REQUIRE(r.found());
  CHECK(*r.width == 5);
  CHECK(r.path->edges.size() == 1);
}

TEST_CASE("Fig 4 style line") {
  // v1..v9 at 0..8, s = v4, t = v9; v3 has a long reach, v7 a medium one.
  std::vector<double> r(9, 1.0);
  r[2] = 4;
  r[6] = 2;
  const auto inst = disk({0, 1, 2, 3, 4, 5, 6, 7, 8}, r, 3, 8);
  const auto run = nbi_run(inst);
  REQUIRE(run.relays);
  const auto h = build_line_hypergraph(inst);
  const auto nb = nbi_solve(inst, h);
  const auto ex = exact(h, inst.source, inst.target);
  CHECK(*nb.width == *ex.width);
  for (std::size_t i = 1; i < run.chain.size(); ++i) CHECK(inst.x[run.chain[i]] < inst.x[run.chain[i - 1]]);
}

TEST_CASE("unreachable target") {
  const auto inst = disk({0, 1, 5}, {1, 1, 1}, 0, 2);
  CHECK_FALSE(nbi_solve(inst).found());
  const auto gap = disk({0, 1, 2, 3}, {0.5, 3, 1, 1}, 0, 3);
  CHECK_FALSE(nbi_solve(gap).found());
  CHECK_FALSE(exact(build_line_hypergraph(gap), 0, 3).found());
}

TEST_CASE("nbi matches exact on random lines") {
  harness::Rng rng(42);
  int found = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto inst = random_line(rng, 2 + static_cast<std::size_t>(trial % 11), trial);
    const auto h = build_line_hypergraph(inst);
    const auto nb = nbi_solve(inst, h);
    const auto ex = exact(h, inst.source, inst.target);
    REQUIRE(nb.found() == ex.found());
    if (!ex.found()) continue;
    ++found;
    CHECK(*nb.width == *ex.width);
    CHECK(validate_hyperpath(h, *nb.path));
  }
  CHECK(found > 200);
}

TEST_CASE("mirroring preserves the width") {
  harness::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = random_line(rng, 10, trial);
    const auto a = nbi_run(inst);
    std::swap(inst.source, inst.target);
    const auto ex = exact(build_line_hypergraph(inst), inst.source, inst.target);
    const auto b = nbi_run(inst);
    REQUIRE(b.relays.has_value() == ex.found());
    if (b.relays) CHECK(b.width == *ex.width);
    (void)a;
  }
}

TEST_CASE("operation count stays within 4n") {
  harness::Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 60);
    const auto inst = random_line(rng, n, trial);
    CHECK(nbi_operation_count(inst) <= 4 * n);
  }
  std::vector<double> x, r;
  for (int i = 0; i < 10; ++i) {
    x.push_back(i);
    r.push_back(1.5);
  }
  const auto ten = disk(x, r, 2, 9);
  CHECK(nbi_operation_count(ten) <= 40);
  // s is on the chain: no BFS needed.
  const auto chain_only = disk(x, r, 0, 9);
  const auto run = nbi_run(chain_only);
  REQUIRE(run.relays);
  CHECK(run.chain.back() == 0);
  CHECK(run.operations <= 10);
}

TEST_CASE("covered area of the NBI path is minimal") {
  harness::Rng rng(45);
  harness::LineGenOptions o;
  o.model = ReachModel::disk;
  for (int trial = 0; trial < 60; ++trial) {
    o.n = 3 + static_cast<std::size_t>(trial % 6);
    o.lattice = trial % 2 == 0;
    const auto inst = harness::gen_random_line(o, rng);
    const auto h = build_line_hypergraph(inst);
    const auto nb = nbi_solve(inst, h);
    if (!nb.found()) continue;
    const auto mine = line_covered_area(inst, h, *nb.path, 1);
    oracle::for_each_relay_sequence(inst, [&](const std::vector<VertexId>& relays) {
      const auto alt = line_covered_area(inst, h, relays_to_hyperpath(h, relays), 1);
      CHECK(geom::area_subset(mine, alt).verdict == geom::Containment::subset);
    });
  }
}

TEST_CASE("1.5-D cost") {
  const auto inst = disk({0, 1, 2, 3}, {1, 1, 1, 1}, 0, 3);
  const auto h = build_line_hypergraph(inst);
  const auto r = nbi_solve(inst, h);
  REQUIRE(r.found());
  EveField none{2, {}};
  CHECK(path_cost_1p5d(inst, none, h, *r.path) == doctest::Approx(static_cast<double>(*r.width)));

  EveField free_eve{2, {{geom::Point{{1.0, 0.2}}, 0.0}}};
  CHECK(path_cost_1p5d(inst, free_eve, h, *r.path) == doctest::Approx(4.0));
  EveField costly{2, {{geom::Point{{1.0, 0.2}}, 2.5}, {geom::Point{{1.0, 5.0}}, 7.0}}};
  CHECK(path_cost_1p5d(inst, costly, h, *r.path) == doctest::Approx(6.5));

  LineInstance iv;
  iv.model = ReachModel::interval;
  iv.x = {0, 1};
  iv.ab = {{1, 1}, {1, 1}};
  iv.target = 1;
  const auto ih = build_line_hypergraph(iv);
  CHECK_THROWS_AS(path_cost_1p5d(iv, none, ih, *nbi_solve(iv, ih).path), InputError);
}

TEST_CASE("eavesdroppers only add cost") {
  harness::Rng rng(46);
  harness::LineGenOptions o;
  o.model = ReachModel::disk;
  o.n = 9;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = harness::gen_random_line(o, rng);
    const auto h = build_line_hypergraph(inst);
    const auto r = nbi_solve(inst, h);
    if (!r.found()) continue;
    EveField f{2, {}};
    double prev = path_cost_1p5d(inst, f, h, *r.path);
    CHECK(prev == doctest::Approx(static_cast<double>(*r.width)));
    for (int k = 0; k < 10; ++k) {
      f.eves.push_back({geom::Point{{rng.uniform(-2, inst.x.back() + 2), rng.uniform(-3, 3)}}, rng.uniform(0, 5)});
      const double c = path_cost_1p5d(inst, f, h, *r.path);
      CHECK(c >= prev);
      prev = c;
    }
  }
}
