#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "thinpath/errors.hpp"
#include "thinpath/harness.hpp"

namespace thinpath::harness {

TrialOutcome run_trial(std::size_t n, const ExperimentConfig& cfg, std::uint64_t trial) {
  const auto g = gen_random_disk(n, cfg, trial);
  const Hypergraph h = geom::build_hypergraph(g);
  TrialOutcome out;
  const auto sp = spba(h, g.source, g.target);
  if (!sp.found()) {
    out.status = TrialStatus::unreachable;
    return out;
  }
  out.spba_width = *sp.width;
  out.tsba_width = *tsba(h, g.source, g.target).width;
  try {
    out.opt_width = *exact(h, g.source, g.target, {cfg.budget, true}).width;
  } catch (const BudgetExceeded&) {
    out.status = TrialStatus::budget;
  }
  return out;
}

std::string_view reference_name(Reference r) noexcept {
  return r == Reference::exact ? "exact" : "heuristic_min";
}

namespace {

std::vector<TrialOutcome> run_trials(std::size_t n, const ExperimentConfig& cfg) {
  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::size_t workers = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) outcomes[i] = run_trial(n, cfg, i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return outcomes;
}

ExperimentRow reduce(std::size_t n, const std::vector<TrialOutcome>& outcomes, bool fallback) {
  ExperimentRow row;
  row.n = n;
  const bool any_budget = std::any_of(outcomes.begin(), outcomes.end(),
                                      [](const TrialOutcome& o) { return o.status == TrialStatus::budget; });
  row.reference = any_budget && fallback ? Reference::heuristic_min : Reference::exact;
  double sum_spba = 0.0, sum_tsba = 0.0;
  for (const auto& o : outcomes) {
    if (o.status == TrialStatus::unreachable) {
      ++row.trials_skipped_unreachable;
      continue;
    }
    std::size_t ref;
    if (row.reference == Reference::heuristic_min) {
      ref = std::min(o.spba_width, o.tsba_width);
    } else if (o.opt_width) {
      ref = *o.opt_width;
    } else {
      ++row.trials_skipped_budget;
      continue;
    }
    sum_spba += static_cast<double>(o.spba_width) / static_cast<double>(ref);
    sum_tsba += static_cast<double>(o.tsba_width) / static_cast<double>(ref);
    ++row.trials_completed;
  }
  const double c = static_cast<double>(row.trials_completed);
  row.mean_ratio_spba = row.trials_completed ? sum_spba / c : std::numeric_limits<double>::quiet_NaN();
  row.mean_ratio_tsba = row.trials_completed ? sum_tsba / c : std::numeric_limits<double>::quiet_NaN();
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ExperimentRow> rows;
  for (std::size_t n : cfg.n_values) rows.push_back(reduce(n, run_trials(n, cfg), cfg.fallback));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%zu,%zu,%zu,%s\n", r.n, r.mean_ratio_spba,
                  r.mean_ratio_tsba, r.trials_completed, r.trials_skipped_unreachable,
                  r.trials_skipped_budget, std::string(reference_name(r.reference)).c_str());
    out << buf;
  }
}

}  // namespace thinpath::harness
