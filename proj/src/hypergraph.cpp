#include "thinpath/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace thinpath {

Hypergraph::Builder::Builder(std::size_t vertex_count, std::size_t vertex_cap) : n_(vertex_count) {
  if (vertex_count > vertex_cap) {
    throw StructuralError("vertex count " + std::to_string(vertex_count) + " exceeds cap " +
                          std::to_string(vertex_cap));
  }
}

Hypergraph::Builder& Hypergraph::Builder::add_edge(VertexId source,
                                                   std::vector<VertexId> destinations) {
  if (source >= n_) throw StructuralError("edge source " + std::to_string(source) + " out of range");
  if (destinations.empty()) throw StructuralError("edge destination set is empty");
  std::sort(destinations.begin(), destinations.end());
  destinations.erase(std::unique(destinations.begin(), destinations.end()), destinations.end());
  if (destinations.back() >= n_) {
    throw StructuralError("edge destination " + std::to_string(destinations.back()) +
                          " out of range");
  }
  pending_.emplace_back(source, std::move(destinations));
  return *this;
}

Hypergraph Hypergraph::Builder::build() && {
  std::sort(pending_.begin(), pending_.end());
  Hypergraph h;
  h.n_ = n_;
  h.out_.resize(n_);
  h.in_.resize(n_);
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    if (!h.edges_.empty() && h.edges_.back().source == pending_[i].first &&
        h.edges_.back().destinations == pending_[i].second) {
      ++h.duplicates_dropped_;
      continue;
    }
    Hyperedge e;
    e.id = static_cast<EdgeId>(h.edges_.size());
    e.source = pending_[i].first;
    e.destinations = std::move(pending_[i].second);
    e.destination_set = VertexSet(n_);
    for (VertexId v : e.destinations) {
      e.destination_set.insert(v);
      h.in_[v].push_back(e.id);
    }
    h.out_[e.source].push_back(e.id);
    h.edges_.push_back(std::move(e));
  }
  pending_.clear();
  return h;
}

const Hyperedge& Hypergraph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw StructuralError("unknown edge id " + std::to_string(id));
  return edges_[id];
}

std::span<const EdgeId> Hypergraph::out_edges(VertexId v) const {
  if (v >= n_) throw StructuralError("unknown vertex " + std::to_string(v));
  return out_[v];
}

std::span<const EdgeId> Hypergraph::in_edges(VertexId v) const {
  if (v >= n_) throw StructuralError("unknown vertex " + std::to_string(v));
  return in_[v];
}

bool Hypergraph::check_consistency() const {
  std::vector<std::vector<EdgeId>> out(n_), in(n_);
  for (const auto& e : edges_) {
    if (e.source >= n_ || e.destinations.empty()) return false;
    if (!std::is_sorted(e.destinations.begin(), e.destinations.end())) return false;
    if (e.destination_set.count() != e.destinations.size()) return false;
    out[e.source].push_back(e.id);
    for (VertexId v : e.destinations) {
      if (v >= n_ || !e.destination_set.contains(v)) return false;
      in[v].push_back(e.id);
    }
  }
  return out == out_ && in == in_;
}

bool validate_hyperpath(const Hypergraph& h, const Hyperpath& p) {
  for (EdgeId id : p.edges) {
    if (!h.has_edge(id)) throw StructuralError("unknown edge id " + std::to_string(id));
  }
  if (p.edges.empty()) return false;
  if (h.edge(p.edges.front()).source != p.origin) return false;
  for (std::size_t i = 1; i < p.edges.size(); ++i) {
    if (!h.edge(p.edges[i - 1]).destination_set.contains(h.edge(p.edges[i]).source)) return false;
  }
  if (p.target >= h.vertex_count()) return false;
  return h.edge(p.edges.back()).destination_set.contains(p.target);
}

Cover cover_of(const Hypergraph& h, const Hyperpath& p) {
  if (!validate_hyperpath(h, p)) throw StructuralError("cover_of: path does not validate");
  Cover c{h.empty_set()};
  c.members.insert(p.origin);
  for (EdgeId id : p.edges) c.members |= h.edge(id).destination_set;
  return c;
}

std::size_t path_length(const Hypergraph& h, const Hyperpath& p) {
  std::size_t total = 0;
  for (EdgeId id : p.edges) total += h.edge(id).weight();
  return total;
}

bool check_monotone_nesting(const Hypergraph& h, bool require_unit_steps) {
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    std::vector<const Hyperedge*> chain;
    for (EdgeId id : h.out_edges(v)) chain.push_back(&h.edge(id));
    // A strict chain is totally ordered by cardinality, so sorting by size
    // recovers the only candidate order.
    std::sort(chain.begin(), chain.end(),
              [](const Hyperedge* a, const Hyperedge* b) { return a->weight() < b->weight(); });
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Hyperedge& prev = *chain[i - 1];
      const Hyperedge& next = *chain[i];
      if (next.weight() <= prev.weight()) return false;
      if (require_unit_steps && next.weight() != prev.weight() + 1) return false;
      if (!prev.destination_set.is_subset_of(next.destination_set)) return false;
    }
  }
  return true;
}

}  // namespace thinpath
