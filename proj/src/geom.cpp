#include "thinpath/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace thinpath::geom {

double squared_distance(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch between points");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

const Point& GeometricInstance::position(VertexId v) const {
  if (v < points.size()) return points[v];
  if (v < vertex_count()) return eves[v - points.size()].position;
  throw StructuralError("unknown vertex " + std::to_string(v));
}

void GeometricInstance::validate() const {
  if (dim < 1 || dim > 3) throw InputError("dim must be 1, 2 or 3");
  if (points.empty()) throw InputError("points: empty");
  if (r_min.size() != points.size()) throw InputError("rmin: length differs from points");
  if (r_max.size() != points.size()) throw InputError("rmax: length differs from points");
  auto check_point = [&](const Point& p, const char* field) {
    if (p.dim() != static_cast<std::size_t>(dim))
      throw InputError(std::string(field) + ": coordinate count differs from dim");
    for (double c : p.coords)
      if (!std::isfinite(c)) throw InputError(std::string(field) + ": non-finite coordinate");
  };
  for (const auto& p : points) check_point(p, "points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(r_min[i]) || !std::isfinite(r_max[i]) || r_min[i] < 0.0)
      throw InputError("rmin/rmax: ranges must be finite and non-negative");
    if (r_min[i] > r_max[i]) throw InputError("rmin: exceeds rmax at vertex " + std::to_string(i));
  }
  for (const auto& e : eves) {
    check_point(e.position, "eves.p");
    if (!(e.cost >= 0.0) || !std::isfinite(e.cost)) throw InputError("eves.c: cost must be >= 0");
  }
  if (source >= points.size()) throw InputError("source: out of range");
  if (target >= points.size()) throw InputError("target: out of range");
}

namespace {

struct Neighbour {
  double d2;
  VertexId id;
};

std::vector<Neighbour> neighbours_within(const GeometricInstance& g, VertexId v, double radius) {
  const double r2 = radius * radius;
  std::vector<Neighbour> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    const double d2 = squared_distance(g.position(v), g.position(u));
    if (d2 <= r2) out.push_back({d2, u});
  }
  std::sort(out.begin(), out.end(), [](const Neighbour& a, const Neighbour& b) {
    return a.d2 != b.d2 ? a.d2 < b.d2 : a.id < b.id;
  });
  return out;
}

}  // namespace

Hypergraph build_ring_hypergraph(const GeometricInstance& g) {
  g.validate();
  Hypergraph::Builder b(g.vertex_count());
  for (VertexId v = 0; v < g.node_count(); ++v) {
    // Radii live in (r_min, r_max]; empty when the two coincide.
    if (!(g.r_min[v] < g.r_max[v])) continue;
    const auto nbrs = neighbours_within(g, v, g.r_max[v]);
    const double inner2 = g.r_min[v] * g.r_min[v];
    std::vector<VertexId> ball;
    std::size_t i = 0;
    // Everything within r_min is heard at every admissible power.
    while (i < nbrs.size() && nbrs[i].d2 <= inner2) ball.push_back(nbrs[i++].id);
    if (!ball.empty()) b.add_edge(v, ball);
    while (i < nbrs.size()) {
      const double level = nbrs[i].d2;
      while (i < nbrs.size() && nbrs[i].d2 == level) ball.push_back(nbrs[i++].id);
      b.add_edge(v, ball);
    }
  }
  return std::move(b).build();
}

Hypergraph build_disk_graph(const GeometricInstance& g) {
  g.validate();
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.r_min[i] != g.r_max[i])
      throw InputError("disk graph requires rmin == rmax at every vertex (vertex " +
                       std::to_string(i) + ")");
  }
  Hypergraph::Builder b(g.vertex_count());
  for (VertexId v = 0; v < g.node_count(); ++v) {
    std::vector<VertexId> ball;
    for (const auto& n : neighbours_within(g, v, g.r_max[v])) ball.push_back(n.id);
    if (!ball.empty()) b.add_edge(v, std::move(ball));
  }
  return std::move(b).build();
}

Hypergraph build_hypergraph(const GeometricInstance& g) {
  switch (g.model) {
    case Model::ring:
      return build_ring_hypergraph(g);
    case Model::disk_hypergraph:
      for (double r : g.r_min)
        if (r != 0.0) throw InputError("rmin: disk_hypergraph model requires rmin = 0");
      return build_ring_hypergraph(g);
    case Model::unit_disk:
      for (std::size_t i = 0; i < g.r_min.size(); ++i)
        if (g.r_min[i] != 0.0 || g.r_max[i] != 1.0)
          throw InputError("rmin/rmax: unit_disk model requires rmin = 0 and rmax = 1");
      return build_ring_hypergraph(g);
    case Model::disk_graph:
      return build_disk_graph(g);
  }
  throw InputError("model: unknown");
}

CoveredArea covered_area(const GeometricInstance& g, const Hypergraph& h, const Hyperpath& p) {
  if (!validate_hyperpath(h, p)) throw StructuralError("covered_area: path does not validate");
  CoveredArea area{g.dim, {}};
  for (EdgeId id : p.edges) {
    const Hyperedge& e = h.edge(id);
    const Point& c = g.position(e.source);
    double r2 = 0.0;
    for (VertexId v : e.destinations) r2 = std::max(r2, squared_distance(c, g.position(v)));
    area.balls.push_back({c, std::sqrt(r2)});
  }
  return area;
}

bool area_contains(const CoveredArea& a, const Point& q) {
  if (q.dim() != static_cast<std::size_t>(a.dim)) throw InputError("area_contains: dimension mismatch");
  for (const Ball& b : a.balls) {
    if (squared_distance(b.center, q) <= b.radius * b.radius) return true;
  }
  return false;
}

namespace {

struct Interval {
  double lo, hi;
};

std::vector<Interval> merged_intervals(const CoveredArea& a) {
  std::vector<Interval> iv;
  for (const Ball& b : a.balls) iv.push_back({b.center.coords[0] - b.radius, b.center.coords[0] + b.radius});
  std::sort(iv.begin(), iv.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (const Interval& i : iv) {
    if (!out.empty() && i.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, i.hi);
    } else {
      out.push_back(i);
    }
  }
  return out;
}

SubsetResult subset_1d(const CoveredArea& inner, const CoveredArea& outer) {
  for (const Ball& b : inner.balls) {
    if (!area_contains(outer, b.center)) return {Containment::not_subset, b.center};
  }
  const auto in = merged_intervals(inner);
  const auto out = merged_intervals(outer);
  for (const Interval& i : in) {
    // The merged outer intervals are disjoint, so i is covered iff a single
    // one contains it.
    auto it = std::upper_bound(out.begin(), out.end(), i.lo,
                               [](double x, const Interval& o) { return x < o.lo; });
    if (it == out.begin()) return {Containment::not_subset, Point{{i.lo}}};
    const Interval& host = *std::prev(it);
    if (host.hi < i.lo) return {Containment::not_subset, Point{{i.lo}}};
    if (host.hi < i.hi) {
      const double gap_end = it == out.end() ? i.hi : std::min(i.hi, it->lo);
      return {Containment::not_subset, Point{{0.5 * (host.hi + gap_end)}}};
    }
  }
  return {Containment::subset, std::nullopt};
}

bool ball_in_ball(const Ball& inner, const Ball& outer) {
  if (inner.radius > outer.radius) return false;
  const double slack = outer.radius - inner.radius;
  return squared_distance(inner.center, outer.center) <= slack * slack;
}

}  // namespace

SubsetResult area_subset(const CoveredArea& inner, const CoveredArea& outer,
                         const SubsetOptions& opts) {
  if (inner.dim != outer.dim) throw InputError("area_subset: dimension mismatch");
  if (inner.balls.empty()) return {Containment::subset, std::nullopt};
  if (inner.dim == 1) return subset_1d(inner, outer);

  const bool per_ball = std::all_of(inner.balls.begin(), inner.balls.end(), [&](const Ball& b) {
    return std::any_of(outer.balls.begin(), outer.balls.end(),
                       [&](const Ball& o) { return ball_in_ball(b, o); });
  });
  if (per_ball) return {Containment::subset, std::nullopt};

  for (const Ball& b : inner.balls) {
    if (!area_contains(outer, b.center)) return {Containment::not_subset, b.center};
  }
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto dim = static_cast<std::size_t>(inner.dim);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const Ball& b = inner.balls[s % inner.balls.size()];
    // Uniform direction; the first half of samples lands on the boundary
    // where escapes are most likely.
    std::vector<double> dir(dim);
    double norm2 = 0.0;
    for (double& c : dir) {
      c = gauss(rng);
      norm2 += c * c;
    }
    const double scale = s < opts.samples / 2 ? 1.0 : std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    const double f = b.radius * scale / std::sqrt(norm2);
    Point q{b.center.coords};
    for (std::size_t i = 0; i < dim; ++i) q.coords[i] += f * dir[i];
    if (!area_contains(outer, q)) return {Containment::not_subset, q};
  }
  return {Containment::unknown, std::nullopt};
}

double compute_alpha(const GeometricInstance& g) {
  if (g.node_count() < 2) throw InputError("compute_alpha: needs at least two vertices");
  const double max_r = *std::max_element(g.r_max.begin(), g.r_max.end());
  const double min_r = *std::min_element(g.r_min.begin(), g.r_min.end());
  double min_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (std::size_t j = i + 1; j < g.node_count(); ++j)
      min_d2 = std::min(min_d2, squared_distance(g.points[i], g.points[j]));
  const double denom = std::max(min_r, std::sqrt(min_d2));
  if (!(denom > 0.0))
    throw DegenerateInstance("compute_alpha: coincident points with zero minimum range");
  return max_r / denom;
}

double ring_bound(double alpha, int dim) { return 2.0 * std::pow(1.0 + 2.0 * alpha, dim); }

}  // namespace thinpath::geom
