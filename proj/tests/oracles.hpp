#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "thinpath/geom.hpp"
#include "thinpath/hypergraph.hpp"
#include "thinpath/nbi.hpp"

namespace oracle {

using thinpath::EdgeId;
using thinpath::Hypergraph;
using thinpath::Hyperpath;
using thinpath::VertexId;

// Minimum width by enumerating candidate covers S ⊇ {s, t} in increasing size
// and asking whether t is reachable using only edges with T_e ⊆ S.
inline std::optional<std::size_t> min_width_by_subsets(const Hypergraph& h, VertexId s, VertexId t) {
  const std::size_t n = h.vertex_count();
  if (n > 20) return std::nullopt;
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (VertexId v : e.destinations) m |= 1U << v;
    masks.push_back(m);
  }
  const std::uint32_t must = (1U << s) | (1U << t);
  std::optional<std::size_t> best;
  for (std::uint32_t set = 0; set < (1U << n); ++set) {
    if ((set & must) != must) continue;
    const auto width = static_cast<std::size_t>(std::popcount(set));
    if (best && width >= *best) continue;
    std::uint32_t reached = 1U << s;
    bool grew = true;
    while (grew && !(reached >> t & 1U)) {
      grew = false;
      for (std::size_t i = 0; i < masks.size(); ++i) {
        const auto& e = h.edges()[i];
        if ((reached >> e.source & 1U) && (masks[i] & ~set) == 0 && (masks[i] & ~reached)) {
          reached |= masks[i];
          grew = true;
        }
      }
    }
    if (reached >> t & 1U) best = width;
  }
  return best;
}

// Every hyperpath from s to t whose relays (edge sources) are pairwise
// distinct and that stops at the first edge reaching t. Returns false if the
// limit cut the enumeration short.
inline bool for_each_relay_simple_path(const Hypergraph& h, VertexId s, VertexId t,
                                       const std::function<void(const Hyperpath&)>& visit,
                                       std::size_t limit = 2'000'000) {
  std::vector<bool> used(h.vertex_count(), false);
  Hyperpath p{s, t, {}};
  std::size_t emitted = 0;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (emitted >= limit) return;
    used[v] = true;
    for (EdgeId id : h.out_edges(v)) {
      const auto& e = h.edge(id);
      p.edges.push_back(id);
      if (e.destination_set.contains(t)) {
        visit(p);
        ++emitted;
      } else {
        for (VertexId u : e.destinations)
          if (!used[u]) dfs(u);
      }
      p.edges.pop_back();
    }
    used[v] = false;
  };
  dfs(s);
  return emitted < limit;
}

// Minimum width over relay-simple paths, depth-first with a plain
// cover-size bound.
inline std::optional<std::size_t> min_width_by_paths(const Hypergraph& h, VertexId s, VertexId t) {
  std::optional<std::size_t> best;
  std::vector<bool> used(h.vertex_count(), false);
  std::function<void(VertexId, const thinpath::VertexSet&)> dfs = [&](VertexId v,
                                                                     const thinpath::VertexSet& cover) {
    used[v] = true;
    for (EdgeId id : h.out_edges(v)) {
      const auto& e = h.edge(id);
      const thinpath::VertexSet next = cover | e.destination_set;
      const std::size_t w = next.count();
      if (best && w >= *best) continue;
      if (next.contains(t)) {
        best = w;
        continue;
      }
      for (VertexId u : e.destinations)
        if (!used[u]) dfs(u, next);
    }
    used[v] = false;
  };
  thinpath::VertexSet start(h.vertex_count());
  start.insert(s);
  dfs(s, start);
  return best;
}

// Relay sequences s, ..., t with each relay heard by the previous one at
// maximum power; relays pairwise distinct. Returns false if truncated.
inline bool for_each_relay_sequence(const thinpath::nbi::LineInstance& inst,
                                    const std::function<void(const std::vector<VertexId>&)>& visit,
                                    std::size_t limit = 2'000'000) {
  const std::size_t n = inst.size();
  std::vector<bool> used(n, false);
  std::vector<VertexId> seq{inst.source};
  std::size_t emitted = 0;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (emitted >= limit) return;
    used[v] = true;
    for (VertexId u = 0; u < n; ++u) {
      if (used[u] || u == v || !inst.reaches(v, u)) continue;
      seq.push_back(u);
      if (u == inst.target) {
        visit(seq);
        ++emitted;
      } else {
        dfs(u);
      }
      seq.pop_back();
    }
    used[v] = false;
  };
  dfs(inst.source);
  return emitted < limit;
}

inline std::optional<VertexId> predecessor_scan(const thinpath::nbi::LineInstance& inst, VertexId v) {
  std::optional<VertexId> best;
  for (VertexId u = 0; u < inst.size(); ++u) {
    if (!(inst.x[u] < inst.x[v]) || !inst.reaches(u, v)) continue;
    if (!best || inst.x[u] > inst.x[*best] || (inst.x[u] == inst.x[*best] && u > *best)) best = u;
  }
  return best;
}

inline double alpha_scan(const thinpath::geom::GeometricInstance& g) {
  double max_r = 0.0, min_r = std::numeric_limits<double>::infinity();
  double min_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    max_r = std::max(max_r, g.r_max[i]);
    min_r = std::min(min_r, g.r_min[i]);
    for (std::size_t j = 0; j < g.node_count(); ++j) {
      if (i == j) continue;
      double d2 = 0.0;
      for (std::size_t k = 0; k < g.points[i].dim(); ++k) {
        const double d = g.points[i].coords[k] - g.points[j].coords[k];
        d2 += d * d;
      }
      min_d = std::min(min_d, std::sqrt(d2));
    }
  }
  return max_r / std::max(min_r, min_d);
}

// Distinct squared distances from v inside (r_v², R_v²], plus one for a
// non-empty inner ball.
inline std::size_t ring_edge_count_scan(const thinpath::geom::GeometricInstance& g, VertexId v) {
  if (!(g.r_min[v] < g.r_max[v])) return 0;
  std::vector<double> levels;
  bool inner = false;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    const double d2 = thinpath::geom::squared_distance(g.position(v), g.position(u));
    if (d2 <= g.r_min[v] * g.r_min[v]) inner = true;
    else if (d2 <= g.r_max[v] * g.r_max[v]) levels.push_back(d2);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels.size() + (inner ? 1 : 0);
}

}  // namespace oracle
