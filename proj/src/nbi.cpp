#include "thinpath/nbi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace thinpath::nbi {
namespace {

// Power level at which a transmitter first hears a vertex, as num/den.
// den == 0 encodes "never" (a side with zero reach).
struct Level {
  double num;
  double den;
};

bool level_le(Level a, Level b) {
  if (a.den == 0.0) return b.den == 0.0;
  if (b.den == 0.0) return true;
  return a.num * b.den <= b.num * a.den;
}

Level level_of(const LineInstance& inst, VertexId v, VertexId u) {
  const double dx = inst.x[u] - inst.x[v];
  if (inst.model == ReachModel::disk) return {std::abs(dx), 1.0};
  if (dx == 0.0) return {0.0, 1.0};
  const auto [a, b] = inst.ab[v];
  return dx < 0.0 ? Level{-dx, a} : Level{dx, b};
}

}  // namespace

void LineInstance::validate() const {
  const std::size_t n = x.size();
  if (n < 2) throw InputError("x: need at least two vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x[i])) throw InputError("x: non-finite coordinate");
    if (i > 0 && x[i] < x[i - 1]) throw InputError("x: coordinates must be sorted");
  }
  if (source >= n) throw InputError("source: out of range");
  if (target >= n) throw InputError("target: out of range");
  if (source == target) throw InputError("source: equals target");
  if (model == ReachModel::disk) {
    if (radius.size() != n) throw InputError("reach.r: length differs from x");
    for (double r : radius)
      if (!std::isfinite(r) || r < 0.0) throw InputError("reach.r: radii must be finite and >= 0");
    return;
  }
  if (ab.size() != n) throw InputError("reach.ab: length differs from x");
  std::optional<std::pair<double, double>> ref;
  for (const auto& [a, b] : ab) {
    if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0)
      throw InputError("reach.ab: reaches must be finite and >= 0");
    if (a == 0.0 && b == 0.0) continue;
    if (!ref) {
      ref = std::pair{a, b};
      continue;
    }
    const double lhs = a * ref->second;
    const double rhs = ref->first * b;
    if (std::abs(lhs - rhs) > 1e-9 * std::max(std::abs(lhs), std::abs(rhs)))
      throw InputError("reach.ab: interval model requires a common skew a_i/b_i across vertices");
  }
}

bool LineInstance::reaches(VertexId v, VertexId u) const {
  if (u == v) return false;
  const double dx = x[u] - x[v];
  if (model == ReachModel::disk) return radius[v] > 0.0 && std::abs(dx) <= radius[v];
  const auto [a, b] = ab[v];
  if (dx == 0.0) return a > 0.0 || b > 0.0;
  return dx < 0.0 ? (a > 0.0 && -dx <= a) : (b > 0.0 && dx <= b);
}

bool LineInstance::heard_with(VertexId v, VertexId u, VertexId w) const {
  return level_le(level_of(*this, v, u), level_of(*this, v, w));
}

Hypergraph build_line_hypergraph(const LineInstance& inst) {
  inst.validate();
  Hypergraph::Builder b(inst.size());
  for (VertexId v = 0; v < inst.size(); ++v) {
    std::vector<VertexId> heard;
    for (VertexId u = 0; u < inst.size(); ++u)
      if (inst.reaches(v, u)) heard.push_back(u);
    std::stable_sort(heard.begin(), heard.end(), [&](VertexId p, VertexId q) {
      return !inst.heard_with(v, q, p);  // level(p) < level(q)
    });
    std::vector<VertexId> ball;
    for (std::size_t i = 0; i < heard.size();) {
      const VertexId lead = heard[i];
      while (i < heard.size() && inst.heard_with(v, heard[i], lead)) ball.push_back(heard[i++]);
      b.add_edge(v, ball);
    }
  }
  return std::move(b).build();
}

std::optional<VertexId> predecessor(const LineInstance& inst, VertexId v) {
  for (VertexId u = v; u-- > 0;) {
    if (inst.x[u] < inst.x[v] && inst.reaches(u, v)) return u;
  }
  return std::nullopt;
}

namespace {

// Index range [lo, hi] heard by the smallest power of v that reaches w.
std::pair<std::size_t, std::size_t> hop_range(const LineInstance& inst, VertexId v, VertexId w) {
  std::size_t lo = 0, hi = v;  // first heard index in [0, v]
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (inst.heard_with(v, static_cast<VertexId>(mid), w)) hi = mid; else lo = mid + 1;
  }
  const std::size_t left = lo;
  lo = v;
  hi = inst.size() - 1;  // last heard index in [v, n)
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (inst.heard_with(v, static_cast<VertexId>(mid), w)) lo = mid; else hi = mid - 1;
  }
  return {left, lo};
}

std::size_t relay_cover_width(const LineInstance& inst, const std::vector<VertexId>& relays) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i + 1 < relays.size(); ++i)
    ranges.push_back(hop_range(inst, relays[i], relays[i + 1]));
  std::sort(ranges.begin(), ranges.end());
  std::size_t width = 0;
  std::size_t next_free = 0;
  for (auto [lo, hi] : ranges) {
    lo = std::max(lo, next_free);
    if (lo <= hi) {
      width += hi - lo + 1;
      next_free = hi + 1;
    }
  }
  return width;
}

// Assumes x[source] < x[target].
NbiOutcome run_forward(const LineInstance& inst) {
  NbiOutcome out;
  const VertexId s = inst.source;
  const VertexId t = inst.target;

  // Step 1: predecessor chain from t back to the first vertex at or left of s.
  VertexId current = t;
  std::size_t scan = t;
  while (true) {
    std::optional<VertexId> pred;
    while (scan-- > 0) {
      ++out.operations;
      if (!(inst.x[scan] < inst.x[current])) continue;
      if (inst.reaches(static_cast<VertexId>(scan), current)) {
        pred = static_cast<VertexId>(scan);
        break;
      }
    }
    if (!pred) return out;
    out.chain.push_back(*pred);
    current = *pred;
    if (inst.x[current] <= inst.x[s]) break;
  }
  const VertexId last = out.chain.back();
  const VertexId before_last = out.chain.size() >= 2 ? out.chain[out.chain.size() - 2] : t;

  std::vector<VertexId> relays;
  if (last != s) {
    // Step 2: two-pointer BFS inside V' = [x_{u_l}, x_{u_{l-1}}).
    std::size_t lo = last;
    while (lo > 0 && inst.x[lo - 1] == inst.x[last]) --lo;
    std::size_t hi = before_last;
    while (hi > 0 && inst.x[hi - 1] == inst.x[before_last]) --hi;
    if (hi == 0) return out;
    --hi;

    std::vector<std::optional<VertexId>> parent(inst.size());
    std::deque<VertexId> queue{s};
    std::size_t k_left = s, k_right = s;
    bool found = false;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (v == last) {
        found = true;
        break;
      }
      while (k_right + 1 <= hi) {
        ++out.operations;
        const auto w = static_cast<VertexId>(k_right + 1);
        if (!inst.reaches(v, w)) break;
        parent[w] = v;
        queue.push_back(w);
        ++k_right;
      }
      while (k_left > lo) {
        ++out.operations;
        const auto w = static_cast<VertexId>(k_left - 1);
        if (!inst.reaches(v, w)) break;
        parent[w] = v;
        queue.push_back(w);
        --k_left;
      }
    }
    if (!found) return out;
    for (VertexId v = last; v != s; v = *parent[v]) relays.push_back(v);
    relays.push_back(s);
    std::reverse(relays.begin(), relays.end());
  } else {
    relays.push_back(s);
  }
  for (std::size_t i = out.chain.size() - 1; i-- > 0;) relays.push_back(out.chain[i]);
  relays.push_back(t);

  out.width = relay_cover_width(inst, relays);
  out.relays = std::move(relays);
  return out;
}

LineInstance mirrored(const LineInstance& inst) {
  const std::size_t n = inst.size();
  LineInstance m = inst;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    m.x[i] = -inst.x[j];
    if (inst.model == ReachModel::disk) {
      m.radius[i] = inst.radius[j];
    } else {
      m.ab[i] = {inst.ab[j].second, inst.ab[j].first};
    }
  }
  m.source = static_cast<VertexId>(n - 1 - inst.source);
  m.target = static_cast<VertexId>(n - 1 - inst.target);
  return m;
}

}  // namespace

NbiOutcome nbi_run(const LineInstance& inst) {
  inst.validate();
  const VertexId s = inst.source;
  const VertexId t = inst.target;
  if (inst.x[s] == inst.x[t]) {
    // Coincident endpoints: s's smallest power already reaches t.
    NbiOutcome out;
    out.operations = 1;
    if (inst.reaches(s, t)) {
      out.relays = std::vector<VertexId>{s, t};
      out.width = relay_cover_width(inst, *out.relays);
    }
    return out;
  }
  if (inst.x[s] < inst.x[t]) return run_forward(inst);

  const auto n = static_cast<VertexId>(inst.size());
  NbiOutcome out = run_forward(mirrored(inst));
  auto unmirror = [n](VertexId v) { return static_cast<VertexId>(n - 1 - v); };
  for (VertexId& v : out.chain) v = unmirror(v);
  if (out.relays)
    for (VertexId& v : *out.relays) v = unmirror(v);
  return out;
}

Hyperpath relays_to_hyperpath(const Hypergraph& line_h, const std::vector<VertexId>& relays) {
  if (relays.size() < 2) throw StructuralError("relay sequence needs at least two vertices");
  Hyperpath p{relays.front(), relays.back(), {}};
  for (std::size_t i = 0; i + 1 < relays.size(); ++i) {
    std::optional<EdgeId> best;
    for (EdgeId id : line_h.out_edges(relays[i])) {
      const Hyperedge& e = line_h.edge(id);
      if (!e.destination_set.contains(relays[i + 1])) continue;
      if (!best || e.weight() < line_h.edge(*best).weight()) best = id;
    }
    if (!best) throw StructuralError("hop " + std::to_string(relays[i]) + " -> " +
                                     std::to_string(relays[i + 1]) + " has no edge");
    p.edges.push_back(*best);
  }
  return p;
}

SolveResult nbi_solve(const LineInstance& inst, const Hypergraph& line_h) {
  const NbiOutcome run = nbi_run(inst);
  SolveResult r;
  r.diagnostics.states_explored = run.operations;
  if (!run.relays) return r;
  r.path = relays_to_hyperpath(line_h, *run.relays);
  r.cover = cover_of(line_h, *r.path);
  r.width = r.cover->width();
  if (*r.width != run.width) throw std::logic_error("nbi: interval cover disagrees with hypergraph cover");
  return r;
}

SolveResult nbi_solve(const LineInstance& inst) { return nbi_solve(inst, build_line_hypergraph(inst)); }

std::size_t nbi_operation_count(const LineInstance& inst) { return nbi_run(inst).operations; }

geom::Point embed(double x, int dim) {
  geom::Point p{std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
  p.coords[0] = x;
  return p;
}

geom::CoveredArea line_covered_area(const LineInstance& inst, const Hypergraph& line_h,
                                    const Hyperpath& p, int dim) {
  if (inst.model != ReachModel::disk)
    throw InputError("covered area is defined for the disk propagation model only");
  if (dim < 1) throw InputError("dim must be positive");
  if (!validate_hyperpath(line_h, p)) throw StructuralError("line_covered_area: invalid path");
  geom::CoveredArea area{dim, {}};
  for (EdgeId id : p.edges) {
    const Hyperedge& e = line_h.edge(id);
    double r = 0.0;
    for (VertexId v : e.destinations) r = std::max(r, std::abs(inst.x[v] - inst.x[e.source]));
    area.balls.push_back({embed(inst.x[e.source], dim), r});
  }
  return area;
}

double path_cost_1p5d(const LineInstance& inst, const EveField& field, const Hypergraph& line_h,
                      const Hyperpath& p) {
  const geom::CoveredArea area = line_covered_area(inst, line_h, p, field.dim);
  double cost = 0.0;
  for (double x : inst.x)
    if (geom::area_contains(area, embed(x, field.dim))) cost += 1.0;
  for (const auto& e : field.eves)
    if (geom::area_contains(area, e.position)) cost += e.cost;
  return cost;
}

}  // namespace thinpath::nbi
