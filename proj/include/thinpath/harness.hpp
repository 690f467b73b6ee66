#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thinpath/gadgets.hpp"
#include "thinpath/geom.hpp"
#include "thinpath/hypergraph.hpp"
#include "thinpath/nbi.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath::harness {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Counter-based stream key: the same (seed, n, trial) always yields the same
// stream, independent of how many other trials ran.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) noexcept;

// mt19937_64 with distribution code pinned here rather than in the standard
// library, so streams are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : engine_(key) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  double rho = 1.5;
  double r_min = 1.0;  // lower end of the maximum-range interval
  double r_max = 5.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int dimension = 2;
  std::size_t budget = 1'000'000;
  // Use min(SPBA, TSBA) as the row reference when exact exceeds the budget.
  bool fallback = true;
  std::size_t threads = 0;  // 0 = hardware concurrency

  // Throws InputError.
  void validate() const;
};

inline constexpr const char* kStRule = "max_distance";

// n uniform points on a square of side n/ρ, R_i uniform on [R_min, R_max],
// r_i = 0, source/target the farthest pair (lowest ids on ties).
geom::GeometricInstance gen_random_disk(std::size_t n, const ExperimentConfig& cfg,
                                        std::uint64_t trial);

struct LineGenOptions {
  std::size_t n = 8;
  // nullopt picks disk or interval at random.
  std::optional<nbi::ReachModel> model;
  double spacing = 1.0;  // mean gap between neighbours
  double reach_lo = 0.5;
  double reach_hi = 3.0;
  // Snap coordinates and reaches to a half-integer lattice to force ties.
  bool lattice = false;
};

nbi::LineInstance gen_random_line(const LineGenOptions& opts, Rng& rng);

gadgets::SimpleGraph gen_random_graph(std::size_t n, double edge_probability, Rng& rng);

// Abstract hypergraph with 1..max_out edges per vertex and destination sets
// of size 1..max_dst; s = 0, t = n - 1.
struct RandomHypergraph {
  Hypergraph hypergraph;
  VertexId source = 0;
  VertexId target = 0;
};
RandomHypergraph gen_random_hypergraph(std::size_t n, std::size_t max_out, std::size_t max_dst,
                                       Rng& rng);

enum class TrialStatus { completed, unreachable, budget };

struct TrialOutcome {
  TrialStatus status = TrialStatus::completed;
  std::size_t spba_width = 0;
  std::size_t tsba_width = 0;
  std::optional<std::size_t> opt_width;  // absent when exact ran out of budget
};

TrialOutcome run_trial(std::size_t n, const ExperimentConfig& cfg, std::uint64_t trial);

enum class Reference { exact, heuristic_min };

struct ExperimentRow {
  std::size_t n = 0;
  double mean_ratio_spba = 0.0;
  double mean_ratio_tsba = 0.0;
  std::size_t trials_completed = 0;
  std::size_t trials_skipped_unreachable = 0;
  std::size_t trials_skipped_budget = 0;
  Reference reference = Reference::exact;
};

std::string_view reference_name(Reference r) noexcept;

// One row per n. A row switches wholesale to the heuristic reference when any
// of its trials exceeds the budget and fallback is on; otherwise such trials
// are skipped.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader =
    "n,mean_spba,mean_tsba,completed,skipped_unreachable,skipped_budget,reference";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace thinpath::harness
