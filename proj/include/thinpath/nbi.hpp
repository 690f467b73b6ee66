#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thinpath/geom.hpp"
#include "thinpath/hypergraph.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath::nbi {

// disk: symmetric radius R_i, power sweeps the radius in (0, R_i].
// interval: reach [x_i - a_i, x_i + b_i], power scales both sides together.
// All vertices must share one skew a_i / b_i; NBI is not optimal otherwise.
enum class ReachModel { disk, interval };

struct LineInstance {
  std::vector<double> x;  // non-decreasing
  ReachModel model = ReachModel::disk;
  std::vector<double> radius;                   // disk
  std::vector<std::pair<double, double>> ab;    // interval: (left a, right b)
  VertexId source = 0;
  VertexId target = 0;

  std::size_t size() const noexcept { return x.size(); }

  // Throws InputError naming the violated invariant.
  void validate() const;

  // Whether v's maximum power reaches u.
  bool reaches(VertexId v, VertexId u) const;

  // Whether u is heard at every power of v that reaches w.
  bool heard_with(VertexId v, VertexId u, VertexId w) const;
};

// One edge per distinct power level of each vertex (ties enter together).
Hypergraph build_line_hypergraph(const LineInstance& inst);

// Rightmost vertex strictly left of v (by coordinate) that reaches v.
std::optional<VertexId> predecessor(const LineInstance& inst, VertexId v);

struct NbiOutcome {
  // Relay sequence s, ..., t; absent when t is unreachable.
  std::optional<std::vector<VertexId>> relays;
  std::size_t width = 0;
  // Reachability checks across both steps.
  std::size_t operations = 0;
  // u_1 = ρ_t, u_2 = ρ_{u_1}, ..., u_l.
  std::vector<VertexId> chain;
};

NbiOutcome nbi_run(const LineInstance& inst);

// Each hop v -> w becomes the smallest edge of v containing w.
Hyperpath relays_to_hyperpath(const Hypergraph& line_h, const std::vector<VertexId>& relays);

SolveResult nbi_solve(const LineInstance& inst, const Hypergraph& line_h);
SolveResult nbi_solve(const LineInstance& inst);

std::size_t nbi_operation_count(const LineInstance& inst);

// Eavesdroppers in a dim-dimensional space whose first axis carries the line.
struct EveField {
  int dim = 2;
  std::vector<geom::Eavesdropper> eves;
};

geom::Point embed(double x, int dim);

// Balls of the path's hops, embedded in dim dimensions (disk model only).
geom::CoveredArea line_covered_area(const LineInstance& inst, const Hypergraph& line_h,
                                    const Hyperpath& p, int dim);

// Unit cost per in-network node plus c per eavesdropper inside A(p).
double path_cost_1p5d(const LineInstance& inst, const EveField& field, const Hypergraph& line_h,
                      const Hyperpath& p);

}  // namespace thinpath::nbi
