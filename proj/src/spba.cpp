#include <limits>
#include <queue>

#include "edge_order.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath {

std::string_view tie_break_name(TieBreak mode) noexcept {
  switch (mode) {
    case TieBreak::deterministic_edge_order: return "deterministic_edge_order";
    case TieBreak::reverse_edge_order: return "reverse_edge_order";
    case TieBreak::seeded_random: return "seeded_random";
    case TieBreak::adversarial_oracle: return "adversarial_oracle";
  }
  return "unknown";
}

std::optional<TieBreak> parse_tie_break(std::string_view name) noexcept {
  for (TieBreak m : {TieBreak::deterministic_edge_order, TieBreak::reverse_edge_order,
                     TieBreak::seeded_random, TieBreak::adversarial_oracle}) {
    if (tie_break_name(m) == name) return m;
  }
  if (name == "deterministic") return TieBreak::deterministic_edge_order;
  if (name == "reverse") return TieBreak::reverse_edge_order;
  if (name == "random") return TieBreak::seeded_random;
  return std::nullopt;
}

SolveResult spba(const Hypergraph& h, VertexId s, VertexId t, const TieBreakPolicy& tb) {
  if (s == t) throw InputError("spba: source equals target");
  if (s >= h.vertex_count() || t >= h.vertex_count()) throw StructuralError("spba: vertex out of range");

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> dist(n, kInf);
  std::vector<std::optional<EdgeId>> parent(n);
  std::vector<bool> settled(n, false);
  detail::EdgeOrder order(tb);

  using Item = std::pair<std::size_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = 0;
  heap.push({0, s});

  SolveResult result;
  result.diagnostics.tie_break = tb.mode;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d != dist[u]) continue;
    settled[u] = true;
    ++result.diagnostics.states_explored;
    if (u == t) break;
    for (EdgeId id : order(h.out_edges(u))) {
      const Hyperedge& e = h.edge(id);
      const std::size_t nd = d + e.weight();
      for (VertexId v : e.destinations) {
        if (settled[v]) continue;
        if (nd < dist[v]) {
          dist[v] = nd;
          parent[v] = id;
          heap.push({nd, v});
          ++result.diagnostics.relaxations;
        } else if (nd == dist[v] && order.replace_on_tie({v, *parent[v], id, nd})) {
          parent[v] = id;
          ++result.diagnostics.relaxations;
        }
      }
    }
  }

  if (!settled[t]) return result;
  result.path = detail::trace_parents(h, s, t, parent);
  result.cover = cover_of(h, *result.path);
  result.width = result.cover->width();
  return result;
}

}  // namespace thinpath
