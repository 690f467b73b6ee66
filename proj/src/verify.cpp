#include <cmath>
#include <sstream>

#include "thinpath/errors.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath {

double spba_general_bound(std::size_t n) { return std::sqrt(static_cast<double>(n) / 2.0); }

double tsba_general_bound(std::size_t n) {
  return static_cast<double>(n) / (2.0 * std::sqrt(static_cast<double>(n) - 1.0));
}

BoundReport verify_ratio_bounds(const Hypergraph& h, VertexId s, VertexId t,
                                const geom::GeometricInstance* geometry, const ExactOptions& opts,
                                const TieBreakPolicy& tb) {
  BoundReport r;
  r.n = h.vertex_count();
  r.spba_bound = spba_general_bound(r.n);
  r.tsba_bound = tsba_general_bound(r.n);
  if (geometry != nullptr) {
    try {
      r.alpha = geom::compute_alpha(*geometry);
      r.ring_bound = geom::ring_bound(*r.alpha, geometry->dim);
    } catch (const DegenerateInstance&) {
      // coincident nodes with zero inner range: α is undefined
    }
  }

  SolveResult opt;
  try {
    opt = exact(h, s, t, opts);
  } catch (const BudgetExceeded&) {
    return r;
  }
  r.complete = true;
  if (!opt.found()) return r;
  r.reachable = true;

  const SolveResult a = spba(h, s, t, tb);
  const SolveResult b = tsba(h, s, t, tb);
  r.opt_width = *opt.width;
  r.spba_width = *a.width;
  r.tsba_width = *b.width;
  r.spba_ratio = static_cast<double>(r.spba_width) / static_cast<double>(r.opt_width);
  r.tsba_ratio = static_cast<double>(r.tsba_width) / static_cast<double>(r.opt_width);

  // Ratios are rationals of small integers; a relative slack of 1e-12 only
  // absorbs rounding in the irrational bounds.
  constexpr double kSlack = 1e-12;
  auto check = [&](const char* what, double ratio, double bound) {
    if (ratio > bound * (1.0 + kSlack)) {
      std::ostringstream os;
      os << what << " ratio " << ratio << " exceeds bound " << bound;
      r.violations.push_back(os.str());
    }
  };
  if (r.opt_width > r.spba_width || r.opt_width > r.tsba_width)
    r.violations.push_back("exact width larger than a heuristic width");
  check("spba", r.spba_ratio, r.spba_bound);
  check("tsba", r.tsba_ratio, r.tsba_bound);
  if (r.ring_bound) {
    check("spba ring", r.spba_ratio, *r.ring_bound);
    check("tsba ring", r.tsba_ratio, *r.ring_bound);
  }
  return r;
}

}  // namespace thinpath
