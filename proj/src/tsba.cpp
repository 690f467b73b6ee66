#include <limits>
#include <queue>

#include "edge_order.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath {
namespace {

struct TsbaRun {
  TsbaTree tree;
  std::vector<std::size_t> width;
  Diagnostics diag;
};

TsbaRun run_tsba(const Hypergraph& h, VertexId s, std::optional<VertexId> stop_at,
                 const TieBreakPolicy& tb) {
  if (s >= h.vertex_count()) throw StructuralError("tsba: source out of range");
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = h.vertex_count();

  TsbaRun run;
  run.tree.covers.resize(n);
  run.tree.parent.resize(n);
  run.tree.settled.assign(n, false);
  run.width.assign(n, kInf);
  run.diag.tie_break = tb.mode;
  detail::EdgeOrder order(tb);

  using Item = std::pair<std::size_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  run.tree.covers[s] = h.empty_set();
  run.tree.covers[s]->insert(s);
  run.width[s] = 1;
  heap.push({1, s});

  while (!heap.empty()) {
    const auto [w, u] = heap.top();
    heap.pop();
    if (run.tree.settled[u] || w != run.width[u]) continue;
    run.tree.settled[u] = true;
    ++run.diag.states_explored;
    if (stop_at && u == *stop_at) break;
    const VertexSet& base = *run.tree.covers[u];
    for (EdgeId id : order(h.out_edges(u))) {
      const Hyperedge& e = h.edge(id);
      const std::size_t cand = base.union_count(e.destination_set);
      std::optional<VertexSet> merged;
      for (VertexId v : e.destinations) {
        if (run.tree.settled[v]) continue;
        const bool better = cand < run.width[v];
        if (!better && !(cand == run.width[v] && order.replace_on_tie({v, *run.tree.parent[v], id, cand})))
          continue;
        if (!merged) merged = base | e.destination_set;
        run.tree.covers[v] = *merged;
        run.tree.parent[v] = id;
        run.width[v] = cand;
        if (better) heap.push({cand, v});
        ++run.diag.relaxations;
      }
    }
  }
  return run;
}

}  // namespace

SolveResult tsba(const Hypergraph& h, VertexId s, VertexId t, const TieBreakPolicy& tb) {
  if (s == t) throw InputError("tsba: source equals target");
  if (t >= h.vertex_count()) throw StructuralError("tsba: target out of range");
  TsbaRun run = run_tsba(h, s, t, tb);
  SolveResult result;
  result.diagnostics = run.diag;
  if (!run.tree.settled[t]) return result;
  result.path = detail::trace_parents(h, s, t, run.tree.parent);
  result.cover = Cover{*run.tree.covers[t]};
  result.width = run.width[t];
  return result;
}

TsbaTree tsba_tree(const Hypergraph& h, VertexId s, const TieBreakPolicy& tb) {
  return run_tsba(h, s, std::nullopt, tb).tree;
}

}  // namespace thinpath
