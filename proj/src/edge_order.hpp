#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <vector>

#include "thinpath/solvers.hpp"

namespace thinpath::detail {

// Relaxation order of a vertex's outgoing edges under a tie-break policy.
class EdgeOrder {
 public:
  explicit EdgeOrder(const TieBreakPolicy& tb) : tb_(tb), rng_(tb.seed) {
    if (tb.mode == TieBreak::adversarial_oracle && !tb.oracle)
      throw std::invalid_argument("adversarial_oracle tie-break needs an oracle callback");
  }

  std::span<const EdgeId> operator()(std::span<const EdgeId> out) {
    if (tb_.mode == TieBreak::deterministic_edge_order || tb_.mode == TieBreak::adversarial_oracle)
      return out;
    scratch_.assign(out.begin(), out.end());
    if (tb_.mode == TieBreak::reverse_edge_order) {
      std::reverse(scratch_.begin(), scratch_.end());
    } else {
      std::shuffle(scratch_.begin(), scratch_.end(), rng_);
    }
    return scratch_;
  }

  // Whether an equal-key candidate replaces the stored label.
  bool replace_on_tie(const TieContext& ctx) const {
    return tb_.mode == TieBreak::adversarial_oracle && tb_.oracle(ctx);
  }

 private:
  const TieBreakPolicy& tb_;
  std::mt19937_64 rng_;
  std::vector<EdgeId> scratch_;
};

// Walks parent edges back from t. Every parent's source was settled before
// its child, so the walk terminates at s.
template <typename ParentVec>
Hyperpath trace_parents(const Hypergraph& h, VertexId s, VertexId t, const ParentVec& parent) {
  Hyperpath p{s, t, {}};
  VertexId v = t;
  do {
    const EdgeId e = *parent[v];
    p.edges.push_back(e);
    v = h.edge(e).source;
  } while (v != s);
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace thinpath::detail
