#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "thinpath/hypergraph.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath::gadgets {

// Undirected simple graph on vertices [0, n).
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  // Throws InputError on self-loops, duplicates or out-of-range endpoints.
  void validate() const;
  // Closed neighbourhoods: the vertices each vertex dominates.
  std::vector<std::vector<std::uint32_t>> dominators() const;
};

// MDS -> thinnest path gadget. Normal vertices v_1..v_{n+1} get ids 0..n,
// then n blocks of n_s super-vertex members.
struct ReductionInstance {
  Hypergraph hypergraph;
  std::size_t n_original = 0;
  std::size_t n_s = 0;
  std::vector<std::vector<VertexId>> super_blocks;
  VertexId source = 0;
  VertexId target = 0;

  // Width of the thinnest path when the minimum dominating set has size k.
  std::size_t width_for_dominating_set(std::size_t k) const { return k * n_s + n_original + 1; }
};

ReductionInstance reduce_mds(const SimpleGraph& g, std::size_t n_s);

// Smallest dominating set size by subset enumeration; n <= 20.
std::size_t mds_bruteforce(const SimpleGraph& g);

enum class Family { spba_worst, tsba_worst, fig5_fixture };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct FamilyParams {
  Family family = Family::tsba_worst;
  std::size_t k = 2;
  // spba_worst only; defaults to calibrated_k_prime(k).
  std::optional<std::size_t> k_prime;
};

struct FamilyExpectation {
  std::size_t opt_width = 0;
  std::size_t approx_width = 0;  // SPBA for spba_worst, adversarial TSBA for tsba_worst
  double ratio = 0.0;
};

struct FamilyInstance {
  Family family = Family::tsba_worst;
  Hypergraph hypergraph;
  VertexId source = 0;
  VertexId target = 0;
  FamilyExpectation expected;
  std::size_t k = 0;
  std::size_t k_prime = 0;  // spba_worst only
  // Edges of the approximation's bad path (blue chain / e_i chain).
  std::vector<EdgeId> bad_path_edges;
};

FamilyInstance build_family(const FamilyParams& p);

// k' = k(k+1)/2 - 1: the largest blue-chain length SPBA strictly prefers
// over the red path, which reproduces γ(k) = (k²+k+2)/(2k+4).
std::size_t calibrated_k_prime(std::size_t k);

struct KPrimeTrial {
  std::size_t k_prime;
  TieBreak mode;
  bool selects_blue;
};

struct KPrimeCalibration {
  std::size_t k = 0;
  std::size_t k_prime = 0;  // largest candidate selecting blue under every mode
  std::vector<KPrimeTrial> trials;
};

// Tries k' in {k(k+1)/2 - 1, k(k+1)/2, k(k+1)/2 + 1} under deterministic,
// reverse and seeded-random tie breaks.
KPrimeCalibration calibrate_spba_k_prime(std::size_t k);

// TSBA oracle that always prefers the e_i edge of the tsba_worst family.
std::function<bool(const TieContext&)> tsba_worst_adversary(const FamilyInstance& inst);

}  // namespace thinpath::gadgets
