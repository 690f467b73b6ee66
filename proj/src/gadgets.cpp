#include "thinpath/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <set>
#include <string>

#include "thinpath/fixtures.hpp"
#include "thinpath/io.hpp"

namespace thinpath::gadgets {

void SimpleGraph::validate() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("graph edge endpoint out of range");
    if (a == b) throw InputError("graph self-loop at vertex " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second)
      throw InputError("duplicate graph edge " + std::to_string(a) + "-" + std::to_string(b));
  }
}

std::vector<std::vector<std::uint32_t>> SimpleGraph::dominators() const {
  std::vector<std::vector<std::uint32_t>> dom(n);
  for (std::uint32_t v = 0; v < n; ++v) dom[v].push_back(v);
  for (auto [a, b] : edges) {
    dom[a].push_back(b);
    dom[b].push_back(a);
  }
  for (auto& d : dom) std::sort(d.begin(), d.end());
  return dom;
}

ReductionInstance reduce_mds(const SimpleGraph& g, std::size_t n_s) {
  g.validate();
  if (g.n < 1) throw InputError("reduce_mds: graph needs at least one vertex");
  if (n_s < 1) throw InputError("reduce_mds: super-vertex size must be positive");

  ReductionInstance r;
  r.n_original = g.n;
  r.n_s = n_s;
  r.source = 0;
  r.target = static_cast<VertexId>(g.n);
  VertexId next = static_cast<VertexId>(g.n + 1);
  r.super_blocks.resize(g.n);
  for (auto& block : r.super_blocks)
    for (std::size_t i = 0; i < n_s; ++i) block.push_back(next++);

  Hypergraph::Builder b(next);
  const auto dom = g.dominators();
  for (std::uint32_t i = 0; i < g.n; ++i) {
    for (std::uint32_t j : dom[i]) {
      std::vector<VertexId> dst = r.super_blocks[j];
      dst.push_back(i + 1);
      b.add_edge(i, std::move(dst));
    }
  }
  r.hypergraph = std::move(b).build();
  return r;
}

std::size_t mds_bruteforce(const SimpleGraph& g) {
  g.validate();
  if (g.n > 20) throw InputError("mds_bruteforce: at most 20 vertices");
  if (g.n == 0) return 0;
  std::vector<std::uint32_t> closed(g.n);
  const auto dom = g.dominators();
  for (std::size_t v = 0; v < g.n; ++v)
    for (std::uint32_t u : dom[v]) closed[v] |= 1U << u;
  const std::uint32_t full = (1U << g.n) - 1;
  for (std::size_t k = 1; k <= g.n; ++k) {
    // Gosper's hack over all k-subsets.
    std::uint32_t set = (1U << k) - 1;
    while (set <= full) {
      std::uint32_t covered = 0;
      for (std::uint32_t bits = set; bits; bits &= bits - 1) covered |= closed[std::countr_zero(bits)];
      if (covered == full) return k;
      const std::uint32_t c = set & -set;
      const std::uint32_t r = set + c;
      if (r == 0) break;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  return g.n;
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::spba_worst: return "spba_worst";
    case Family::tsba_worst: return "tsba_worst";
    case Family::fig5_fixture: return "fig5_fixture";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::spba_worst, Family::tsba_worst, Family::fig5_fixture})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::size_t calibrated_k_prime(std::size_t k) { return k * (k + 1) / 2 - 1; }

namespace {

EdgeId find_edge(const Hypergraph& h, VertexId src, std::vector<VertexId> dst) {
  std::sort(dst.begin(), dst.end());
  for (EdgeId id : h.out_edges(src))
    if (h.edge(id).destinations == dst) return id;
  throw std::logic_error("gadget edge missing");
}

FamilyInstance build_tsba_worst(std::size_t k) {
  if (k < 2) throw InputError("tsba_worst: k must be >= 2");
  FamilyInstance f;
  f.family = Family::tsba_worst;
  f.k = k;
  // v_0..v_{k-1} = 0..k-1, t = k, blocks u_1..u_{k-1} then u.
  const auto t = static_cast<VertexId>(k);
  const std::size_t block = k - 1;
  auto block_of = [&](std::size_t b) {  // b in [1, k]; b == k is u
    std::vector<VertexId> out;
    const auto first = static_cast<VertexId>(k + 1 + (b - 1) * block);
    for (std::size_t i = 0; i < block; ++i) out.push_back(first + static_cast<VertexId>(i));
    return out;
  };
  const std::size_t n = k + 1 + k * block;
  Hypergraph::Builder b(n);
  auto head = [&](std::size_t i) { return i == k ? t : static_cast<VertexId>(i); };
  std::vector<std::pair<VertexId, std::vector<VertexId>>> bad;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto src = static_cast<VertexId>(i - 1);
    std::vector<VertexId> prime = block_of(k);
    prime.push_back(head(i));
    b.add_edge(src, prime);
    if (i < k) {
      std::vector<VertexId> plain = block_of(i);
      plain.push_back(head(i));
      b.add_edge(src, plain);
      bad.emplace_back(src, std::move(plain));
    } else {
      bad.emplace_back(src, std::move(prime));
    }
  }
  f.hypergraph = std::move(b).build();
  f.source = 0;
  f.target = t;
  for (auto& [src, dst] : bad) f.bad_path_edges.push_back(find_edge(f.hypergraph, src, dst));
  f.expected.opt_width = 2 * k;
  f.expected.approx_width = k * k + 1;
  f.expected.ratio = static_cast<double>(k * k + 1) / static_cast<double>(2 * k);
  return f;
}

FamilyInstance build_spba_worst(std::size_t k, std::size_t k_prime) {
  if (k < 2) throw InputError("spba_worst: k must be >= 2");
  if (k_prime < 1) throw InputError("spba_worst: k_prime must be >= 1");
  FamilyInstance f;
  f.family = Family::spba_worst;
  f.k = k;
  f.k_prime = k_prime;
  // s = 0, red v_1..v_k = 1..k, blue u_1..u_k' = k+1..k+k', t last.
  const auto t = static_cast<VertexId>(k + k_prime + 1);
  auto red = [&](std::size_t i) { return i == k + 1 ? t : static_cast<VertexId>(i); };
  auto blue = [&](std::size_t i) { return i == k_prime + 1 ? t : static_cast<VertexId>(k + i); };
  Hypergraph::Builder b(k + k_prime + 2);
  b.add_edge(0, {red(1)});
  b.add_edge(0, {blue(1)});
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<VertexId> dst;
    for (std::size_t j = 1; j < i; ++j) dst.push_back(red(j));
    dst.push_back(red(i + 1));
    b.add_edge(red(i), std::move(dst));
  }
  for (std::size_t i = 1; i <= k_prime; ++i) b.add_edge(blue(i), {blue(i + 1)});
  f.hypergraph = std::move(b).build();
  f.source = 0;
  f.target = t;
  f.bad_path_edges.push_back(find_edge(f.hypergraph, 0, {blue(1)}));
  for (std::size_t i = 1; i <= k_prime; ++i)
    f.bad_path_edges.push_back(find_edge(f.hypergraph, blue(i), {blue(i + 1)}));

  const std::size_t red_length = 1 + k * (k + 1) / 2;
  const std::size_t blue_length = 1 + k_prime;
  f.expected.opt_width = std::min(k, k_prime) + 2;
  f.expected.approx_width = blue_length <= red_length ? k_prime + 2 : k + 2;
  f.expected.ratio =
      static_cast<double>(f.expected.approx_width) / static_cast<double>(f.expected.opt_width);
  return f;
}

FamilyInstance build_fig5() {
  const auto parsed = io::hypergraph_from_json(io::json::parse(fixtures::kFig5Json));
  FamilyInstance f;
  f.family = Family::fig5_fixture;
  f.hypergraph = parsed.hypergraph;
  f.source = parsed.source;
  f.target = parsed.target;

  const auto opt = exact(f.hypergraph, f.source, f.target);
  const auto sp = spba(f.hypergraph, f.source, f.target);
  if (!opt.found() || !sp.found() || *sp.width != *opt.width)
    throw std::logic_error("fig5 fixture: SPBA is not optimal on the transcribed instance");
  std::vector<TieBreakPolicy> modes{{TieBreak::deterministic_edge_order, 0, {}},
                                    {TieBreak::reverse_edge_order, 0, {}}};
  for (std::uint64_t seed = 0; seed < 100; ++seed) modes.push_back({TieBreak::seeded_random, seed, {}});
  std::size_t tsba_width = 0;
  for (const auto& tb : modes) {
    const auto r = tsba(f.hypergraph, f.source, f.target, tb);
    if (!r.found() || *r.width <= *opt.width)
      throw std::logic_error("fig5 fixture: TSBA is optimal under tie-break " +
                             std::string(tie_break_name(tb.mode)));
    if (tsba_width == 0) tsba_width = *r.width;
  }
  f.expected.opt_width = *opt.width;
  f.expected.approx_width = tsba_width;
  f.expected.ratio = static_cast<double>(tsba_width) / static_cast<double>(*opt.width);
  f.bad_path_edges = tsba(f.hypergraph, f.source, f.target).path->edges;
  return f;
}

}  // namespace

FamilyInstance build_family(const FamilyParams& p) {
  switch (p.family) {
    case Family::tsba_worst:
      return build_tsba_worst(p.k);
    case Family::spba_worst:
      return build_spba_worst(p.k, p.k_prime.value_or(calibrated_k_prime(p.k)));
    case Family::fig5_fixture:
      return build_fig5();
  }
  throw InputError("unknown family");
}

KPrimeCalibration calibrate_spba_k_prime(std::size_t k) {
  if (k < 2) throw InputError("calibrate_spba_k_prime: k must be >= 2");
  KPrimeCalibration cal;
  cal.k = k;
  const std::size_t tri = k * (k + 1) / 2;
  const std::vector<TieBreakPolicy> modes{{TieBreak::deterministic_edge_order, 0, {}},
                                          {TieBreak::reverse_edge_order, 0, {}},
                                          {TieBreak::seeded_random, 1, {}},
                                          {TieBreak::seeded_random, 2, {}}};
  for (std::size_t kp : {tri - 1, tri, tri + 1}) {
    const FamilyInstance f = build_spba_worst(k, kp);
    bool all_blue = true;
    for (const auto& tb : modes) {
      const auto r = spba(f.hypergraph, f.source, f.target, tb);
      const bool blue = r.found() && r.path->edges == f.bad_path_edges;
      cal.trials.push_back({kp, tb.mode, blue});
      all_blue = all_blue && blue;
    }
    if (all_blue) cal.k_prime = kp;
  }
  return cal;
}

std::function<bool(const TieContext&)> tsba_worst_adversary(const FamilyInstance& inst) {
  std::set<EdgeId> bad(inst.bad_path_edges.begin(), inst.bad_path_edges.end());
  return [bad = std::move(bad)](const TieContext& ctx) {
    return bad.contains(ctx.candidate) && !bad.contains(ctx.incumbent);
  };
}

}  // namespace thinpath::gadgets
