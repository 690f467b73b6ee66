#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thinpath/hypergraph.hpp"

namespace thinpath::geom {

struct Point {
  std::vector<double> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

double squared_distance(const Point& a, const Point& b);

enum class Model { ring, disk_hypergraph, disk_graph, unit_disk };

struct Eavesdropper {
  Point position;
  double cost = 0.0;
};

// Points with per-vertex [r_min, r_max] ranges. Eavesdroppers become extra
// vertices (ids points.size() + i) with no outgoing edges.
struct GeometricInstance {
  int dim = 2;
  std::vector<Point> points;
  std::vector<double> r_min;
  std::vector<double> r_max;
  VertexId source = 0;
  VertexId target = 0;
  std::vector<Eavesdropper> eves;
  Model model = Model::ring;

  std::size_t node_count() const noexcept { return points.size(); }
  std::size_t vertex_count() const noexcept { return points.size() + eves.size(); }
  // Position of a hypergraph vertex (node or eavesdropper).
  const Point& position(VertexId v) const;

  // Throws InputError describing the first violated invariant.
  void validate() const;
};

// One hyperedge per distinct ball {u : d(v,u) <= r}, r in (r_v, R_v].
Hypergraph build_ring_hypergraph(const GeometricInstance& g);

// Fixed power: one edge per node, T = {u != v : d(v,u) <= R_v}. Requires
// r_i == R_i for every node.
Hypergraph build_disk_graph(const GeometricInstance& g);

// Dispatch on g.model after checking the model's range constraints.
Hypergraph build_hypergraph(const GeometricInstance& g);

struct Ball {
  Point center;
  double radius = 0.0;
};

struct CoveredArea {
  int dim = 0;
  std::vector<Ball> balls;
};

// One closed ball per path edge, radius = farthest destination of that edge.
CoveredArea covered_area(const GeometricInstance& g, const Hypergraph& h, const Hyperpath& p);

bool area_contains(const CoveredArea& a, const Point& q);

enum class Containment { subset, not_subset, unknown };

struct SubsetResult {
  Containment verdict = Containment::unknown;
  std::optional<Point> witness;  // a point of inner outside outer
};

struct SubsetOptions {
  std::size_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
};

// Exact in 1-D. In higher dimensions: subset when every inner ball sits in a
// single outer ball; otherwise a seeded search for a witness point, falling
// back to unknown.
SubsetResult area_subset(const CoveredArea& inner, const CoveredArea& outer,
                         const SubsetOptions& opts = {});

// max R / max(min r, min pairwise distance) over the network nodes.
double compute_alpha(const GeometricInstance& g);

// 2(1 + 2α)^d
double ring_bound(double alpha, int dim);

}  // namespace thinpath::geom
