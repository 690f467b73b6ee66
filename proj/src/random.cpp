#include <algorithm>
#include <cmath>
#include <numeric>

#include "thinpath/errors.hpp"
#include "thinpath/harness.hpp"

namespace thinpath::harness {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ trial);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

void ExperimentConfig::validate() const {
  if (!(rho > 0.0)) throw InputError("rho must be positive");
  if (!(r_min > 0.0) || !(r_min <= r_max)) throw InputError("range interval must satisfy 0 < rmin <= rmax");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (dimension < 1) throw InputError("dimension must be at least 1");
  for (std::size_t n : n_values)
    if (n < 2) throw InputError("every n must be at least 2");
}

geom::GeometricInstance gen_random_disk(std::size_t n, const ExperimentConfig& cfg,
                                        std::uint64_t trial) {
  if (n < 2) throw InputError("gen_random_disk: n must be at least 2");
  Rng rng(stream_key(cfg.seed, n, trial));
  const double side = static_cast<double>(n) / cfg.rho;
  geom::GeometricInstance g;
  g.dim = cfg.dimension;
  g.model = geom::Model::ring;
  for (std::size_t i = 0; i < n; ++i) {
    geom::Point p;
    for (int d = 0; d < cfg.dimension; ++d) p.coords.push_back(rng.uniform(0.0, side));
    g.points.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < n; ++i) g.r_max.push_back(rng.uniform(cfg.r_min, cfg.r_max));
  g.r_min.assign(n, 0.0);

  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = geom::squared_distance(g.points[i], g.points[j]);
      if (d2 > best) {
        best = d2;
        g.source = static_cast<VertexId>(i);
        g.target = static_cast<VertexId>(j);
      }
    }
  }
  return g;
}

nbi::LineInstance gen_random_line(const LineGenOptions& opts, Rng& rng) {
  if (opts.n < 2) throw InputError("gen_random_line: n must be at least 2");
  auto snap = [&](double v) { return opts.lattice ? std::round(v * 2.0) / 2.0 : v; };
  nbi::LineInstance inst;
  inst.model = opts.model ? *opts.model
                          : (rng.bernoulli(0.5) ? nbi::ReachModel::disk : nbi::ReachModel::interval);
  double x = 0.0;
  for (std::size_t i = 0; i < opts.n; ++i) {
    inst.x.push_back(snap(x));
    x += rng.uniform(0.0, 2.0 * opts.spacing);
  }
  auto reach = [&] { return std::max(snap(rng.uniform(opts.reach_lo, opts.reach_hi)), opts.lattice ? 0.5 : 0.0); };
  if (inst.model == nbi::ReachModel::disk) {
    for (std::size_t i = 0; i < opts.n; ++i) inst.radius.push_back(reach());
  } else {
    static constexpr double kLatticeSkews[] = {0.5, 1.0, 2.0};
    const double skew = opts.lattice ? kLatticeSkews[rng.below(3)] : std::exp(rng.uniform(std::log(0.25), std::log(4.0)));
    for (std::size_t i = 0; i < opts.n; ++i) {
      const double b = reach();
      inst.ab.emplace_back(skew * b, b);
    }
  }
  inst.source = static_cast<VertexId>(rng.below(opts.n));
  inst.target = static_cast<VertexId>(rng.below(opts.n - 1));
  if (inst.target >= inst.source) ++inst.target;
  return inst;
}

gadgets::SimpleGraph gen_random_graph(std::size_t n, double edge_probability, Rng& rng) {
  gadgets::SimpleGraph g;
  g.n = n;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (rng.bernoulli(edge_probability)) g.edges.emplace_back(a, b);
  return g;
}

RandomHypergraph gen_random_hypergraph(std::size_t n, std::size_t max_out, std::size_t max_dst,
                                       Rng& rng) {
  if (n < 2 || max_out < 1 || max_dst < 1) throw InputError("gen_random_hypergraph: bad parameters");
  Hypergraph::Builder b(n);
  std::vector<VertexId> pool(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t out = 1 + rng.below(max_out);
    for (std::size_t e = 0; e < out; ++e) {
      std::iota(pool.begin(), pool.end(), VertexId{0});
      std::swap(pool[v], pool.back());
      const std::size_t avail = n - 1;
      const std::size_t size = 1 + rng.below(std::min(max_dst, avail));
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(avail - i)]);
      b.add_edge(v, std::vector<VertexId>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));
    }
  }
  return {std::move(b).build(), 0, static_cast<VertexId>(n - 1)};
}

}  // namespace thinpath::harness
