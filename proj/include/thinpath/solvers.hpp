#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "thinpath/geom.hpp"
#include "thinpath/hypergraph.hpp"

namespace thinpath {

enum class TieBreak { deterministic_edge_order, reverse_edge_order, seeded_random, adversarial_oracle };

std::string_view tie_break_name(TieBreak mode) noexcept;
std::optional<TieBreak> parse_tie_break(std::string_view name) noexcept;

// A label update whose new key equals the stored one.
struct TieContext {
  VertexId vertex;
  EdgeId incumbent;  // edge that produced the stored label
  EdgeId candidate;  // edge offering an equal label
  std::size_t key;   // width (TSBA) or distance (SPBA)
};

struct TieBreakPolicy {
  TieBreak mode = TieBreak::deterministic_edge_order;
  std::uint64_t seed = 0;
  // Consulted only in adversarial_oracle mode; true replaces the incumbent.
  std::function<bool(const TieContext&)> oracle;
};

struct Diagnostics {
  std::size_t states_explored = 0;
  std::size_t relaxations = 0;
  TieBreak tie_break = TieBreak::deterministic_edge_order;
};

struct SolveResult {
  std::optional<Hyperpath> path;
  std::optional<std::size_t> width;
  std::optional<Cover> cover;
  Diagnostics diagnostics;

  bool found() const noexcept { return path.has_value(); }
};

// Shortest hyperpath under w(e) = |T_e| (label setting, binary heap with lazy
// deletion). The reported width is the union width of the returned path.
SolveResult spba(const Hypergraph& h, VertexId s, VertexId t, const TieBreakPolicy& tb = {});

// Label setting keyed by true cover width, one stored cover per vertex.
SolveResult tsba(const Hypergraph& h, VertexId s, VertexId t, const TieBreakPolicy& tb = {});

// Full TSBA labelling from s (no early stop at a target).
struct TsbaTree {
  std::vector<std::optional<VertexSet>> covers;
  std::vector<std::optional<EdgeId>> parent;
  std::vector<bool> settled;
};
TsbaTree tsba_tree(const Hypergraph& h, VertexId s, const TieBreakPolicy& tb = {});

struct ExactOptions {
  std::size_t budget = 1'000'000;  // maximum number of generated states
  bool dominance_pruning = true;
};

// Exhaustive best-first search over (relay, cover) states. Returns a
// minimum-width path, or no path when t is unreachable. Throws BudgetExceeded.
SolveResult exact(const Hypergraph& h, VertexId s, VertexId t, const ExactOptions& opts = {});

struct BoundReport {
  std::size_t n = 0;
  bool complete = false;  // false when exact ran out of budget
  bool reachable = false;
  std::size_t opt_width = 0;
  std::size_t spba_width = 0;
  std::size_t tsba_width = 0;
  double spba_ratio = 0.0;
  double tsba_ratio = 0.0;
  double spba_bound = 0.0;  // sqrt(n/2)
  double tsba_bound = 0.0;  // n / (2 sqrt(n-1))
  std::optional<double> alpha;
  std::optional<double> ring_bound;  // 2(1+2α)^d
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

double spba_general_bound(std::size_t n);
double tsba_general_bound(std::size_t n);

BoundReport verify_ratio_bounds(const Hypergraph& h, VertexId s, VertexId t,
                                const geom::GeometricInstance* geometry = nullptr,
                                const ExactOptions& opts = {}, const TieBreakPolicy& tb = {});

}  // namespace thinpath
