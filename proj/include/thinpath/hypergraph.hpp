#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thinpath/errors.hpp"
#include "thinpath/vertex_set.hpp"

namespace thinpath {

// A directed hyperedge: one transmitter, a non-empty receiver set.
struct Hyperedge {
  EdgeId id = 0;
  VertexId source = 0;
  std::vector<VertexId> destinations;  // sorted, unique
  VertexSet destination_set;

  std::size_t weight() const noexcept { return destinations.size(); }
};

// Immutable directed hypergraph. Edges are kept in canonical (source,
// destinations) lexicographic order, so an edge id is stable across
// serialisation round trips.
class Hypergraph {
 public:
  static constexpr std::size_t kDefaultVertexCap = 4096;

  class Builder {
   public:
    explicit Builder(std::size_t vertex_count, std::size_t vertex_cap = kDefaultVertexCap);

    // Destinations are normalised (sorted, deduplicated). Throws
    // StructuralError for empty destination sets or out-of-range ids.
    Builder& add_edge(VertexId source, std::vector<VertexId> destinations);

    Hypergraph build() &&;

   private:
    std::size_t n_;
    std::vector<std::pair<VertexId, std::vector<VertexId>>> pending_;
  };

  Hypergraph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const noexcept { return id < edges_.size(); }

  // Outgoing edge ids of v, in canonical order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  // Ids of edges whose destination set contains v.
  std::span<const EdgeId> in_edges(VertexId v) const;

  // Edges dropped at construction because an identical (source, destinations)
  // pair had already been added.
  std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

  // Full rescan of adjacency/incidence against the edge list.
  bool check_consistency() const;

  VertexSet empty_set() const { return VertexSet(n_); }

 private:
  std::size_t n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::size_t duplicates_dropped_ = 0;
};

struct Hyperpath {
  VertexId origin = 0;
  VertexId target = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const Hyperpath&, const Hyperpath&) = default;
};

struct Cover {
  VertexSet members;
  std::size_t width() const noexcept { return members.count(); }
};

// True iff p chains from origin to target. Unknown edge ids throw
// StructuralError rather than returning false.
bool validate_hyperpath(const Hypergraph& h, const Hyperpath& p);

// {s_{e_1}} ∪ ⋃ T_{e_i}. Throws StructuralError for an invalid path.
Cover cover_of(const Hypergraph& h, const Hyperpath& p);

// Σ |T_e| along the path (duplicates counted).
std::size_t path_length(const Hypergraph& h, const Hyperpath& p);

// Every vertex's outgoing destination sets form a chain under strict
// inclusion. With require_unit_steps, consecutive sets also differ by exactly
// one vertex.
bool check_monotone_nesting(const Hypergraph& h, bool require_unit_steps = true);

}  // namespace thinpath
