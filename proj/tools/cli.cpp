#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "thinpath/errors.hpp"
#include "thinpath/gadgets.hpp"
#include "thinpath/geom.hpp"
#include "thinpath/harness.hpp"
#include "thinpath/io.hpp"
#include "thinpath/nbi.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath::cli {
namespace {

using io::json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + path + "'");
  f << text;
}

TieBreakPolicy tie_policy(const std::string& name, std::uint64_t seed) {
  const auto mode = parse_tie_break(name);
  if (!mode) throw InputError("unknown tie-break mode '" + name + "'");
  if (*mode == TieBreak::adversarial_oracle)
    throw InputError("adversarial tie-break needs an oracle and is not available here");
  return {*mode, seed, {}};
}

struct Loaded {
  io::InstanceKind kind;
  Hypergraph hypergraph;
  VertexId source = 0;
  VertexId target = 0;
  std::optional<geom::GeometricInstance> geometry;
  std::optional<nbi::LineInstance> line;
};

Loaded load_instance(const std::string& path) {
  const json j = io::parse(read_input(path), path == "-" ? "stdin" : path);
  Loaded l;
  l.kind = io::detect_kind(j);
  switch (l.kind) {
    case io::InstanceKind::hypergraph: {
      auto h = io::hypergraph_from_json(j);
      l.hypergraph = std::move(h.hypergraph);
      l.source = h.source;
      l.target = h.target;
      break;
    }
    case io::InstanceKind::geometric:
      l.geometry = io::geometric_from_json(j);
      l.hypergraph = geom::build_hypergraph(*l.geometry);
      l.source = l.geometry->source;
      l.target = l.geometry->target;
      break;
    case io::InstanceKind::line:
      l.line = io::line_from_json(j);
      l.hypergraph = nbi::build_line_hypergraph(*l.line);
      l.source = l.line->source;
      l.target = l.line->target;
      break;
  }
  return l;
}

// A 1-D geometric instance with sorted coordinates and zero inner ranges is a
// disk-model line instance.
nbi::LineInstance as_line(const Loaded& l) {
  if (l.line) return *l.line;
  const auto& g = *l.geometry;
  if (g.dim != 1) throw InputError("nbi requires 1-D instance");
  nbi::LineInstance inst;
  inst.model = nbi::ReachModel::disk;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.r_min[i] != 0.0) throw InputError("nbi requires zero rmin on 1-D geometric instances");
    inst.x.push_back(g.points[i].coords[0]);
  }
  inst.radius = g.r_max;
  inst.source = g.source;
  inst.target = g.target;
  inst.validate();
  return inst;
}

std::string expected_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".expected.json";
  return out + ".expected.json";
}

struct Options {
  std::string out;
  std::string input = "-";
  std::string kind;
  std::string alg;
  std::string tie = "deterministic";
  std::string model = "mixed";
  std::string family = "tsba_worst";
  std::size_t n = 10;
  std::vector<std::size_t> ns;
  std::size_t k = 3;
  std::optional<std::size_t> k_prime;
  std::optional<std::size_t> n_s;
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;
  std::size_t budget = 1'000'000;
  std::size_t threads = 0;
  int dim = 2;
  double rho = 1.5;
  double rmin = 1.0;
  double rmax = 5.0;
  std::size_t trials = 1000;
  bool lattice = false;
  bool no_prune = false;
  bool no_fallback = false;
};

int cmd_gen(const Options& o, std::ostream& out) {
  json j;
  if (o.kind == "random") {
    harness::ExperimentConfig cfg;
    cfg.rho = o.rho;
    cfg.r_min = o.rmin;
    cfg.r_max = o.rmax;
    cfg.seed = o.seed;
    cfg.dimension = o.dim;
    cfg.n_values = {o.n};
    cfg.validate();
    j = io::geometric_to_json(harness::gen_random_disk(o.n, cfg, o.trial));
    j["meta"] = json{{"st_rule", harness::kStRule}, {"seed", o.seed}, {"trial", o.trial}, {"rho", o.rho}};
  } else if (o.kind == "line") {
    harness::LineGenOptions lo;
    lo.n = o.n;
    lo.lattice = o.lattice;
    if (o.model == "disk") lo.model = nbi::ReachModel::disk;
    else if (o.model == "interval") lo.model = nbi::ReachModel::interval;
    else if (o.model != "mixed") throw InputError("unknown line model '" + o.model + "'");
    harness::Rng rng(harness::stream_key(o.seed, o.n, o.trial));
    j = io::line_to_json(harness::gen_random_line(lo, rng));
  } else {
    const auto fam = gadgets::parse_family(o.family);
    if (!fam) throw InputError("unknown family '" + o.family + "'");
    const auto f = gadgets::build_family({*fam, o.k, o.k_prime});
    j = io::hypergraph_to_json(f.hypergraph, f.source, f.target);
  }
  write_output(io::dump(j), o.out, out);
  return kOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto fam = gadgets::parse_family(o.family);
  if (!fam) throw InputError("unknown family '" + o.family + "'");
  const auto f = gadgets::build_family({*fam, o.k, o.k_prime});
  const json inst = io::hypergraph_to_json(f.hypergraph, f.source, f.target);
  const json expected = io::expectation_to_json(f);
  if (o.out.empty() || o.out == "-") {
    out << io::dump(json{{"instance", inst}, {"expected", expected}});
  } else {
    write_output(io::dump(inst), o.out, out);
    write_output(io::dump(expected), expected_path(o.out), out);
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Loaded l = load_instance(o.input);
  SolveResult r;
  if (o.alg == "nbi") {
    if (l.kind == io::InstanceKind::hypergraph || (l.geometry && l.geometry->dim != 1))
      throw InputError("nbi requires 1-D instance");
    r = nbi::nbi_solve(as_line(l));
  } else if (o.alg == "spba") {
    r = spba(l.hypergraph, l.source, l.target, tie_policy(o.tie, o.seed));
  } else if (o.alg == "tsba") {
    r = tsba(l.hypergraph, l.source, l.target, tie_policy(o.tie, o.seed));
  } else if (o.alg == "exact") {
    r = exact(l.hypergraph, l.source, l.target, {o.budget, !o.no_prune});
  } else {
    throw InputError("unknown algorithm '" + o.alg + "'");
  }
  write_output(io::dump(io::result_to_json(r)), o.out, out);
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  std::istringstream in(read_input(o.input));
  const auto g = io::read_edge_list(in);
  const std::size_t n_s = o.n_s.value_or(g.n + 2);
  const auto r = gadgets::reduce_mds(g, n_s);
  json j = io::reduction_to_json(r);
  if (g.n <= 20) {
    const std::size_t mds = gadgets::mds_bruteforce(g);
    j["expected"] = json{{"mds", mds}, {"width", r.width_for_dominating_set(mds)}};
  }
  write_output(io::dump(j), o.out, out);
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  harness::ExperimentConfig cfg;
  cfg.n_values = o.ns;
  cfg.rho = o.rho;
  cfg.r_min = o.rmin;
  cfg.r_max = o.rmax;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.dimension = o.dim;
  cfg.budget = o.budget;
  cfg.fallback = !o.no_fallback;
  cfg.threads = o.threads;
  std::ostringstream csv;
  harness::write_csv(csv, harness::run_experiment(cfg));
  write_output(csv.str(), o.out, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Loaded l = load_instance(o.input);
  const auto report = verify_ratio_bounds(l.hypergraph, l.source, l.target,
                                          l.geometry ? &*l.geometry : nullptr, {o.budget, true},
                                          tie_policy(o.tie, o.seed));
  write_output(io::dump(io::bound_report_to_json(report)), o.out, out);
  return report.complete ? kOk : kBudgetExhausted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Thinnest path toolkit"};
  app.name("thinpath");
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default stdout)"); };
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->capture_default_str();
  };
  auto add_tie = [&](CLI::App* sub) {
    sub->add_option("--tie-break", o.tie, "deterministic, reverse or random")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for random tie-breaking")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance as JSON");
  gen->add_option("kind", o.kind, "random, line or family")
      ->required()
      ->check(CLI::IsMember({"random", "line", "family"}));
  gen->add_option("--n", o.n, "Vertex count")->capture_default_str();
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("--trial", o.trial)->capture_default_str();
  gen->add_option("--rho", o.rho)->capture_default_str();
  gen->add_option("--rmin", o.rmin)->capture_default_str();
  gen->add_option("--rmax", o.rmax)->capture_default_str();
  gen->add_option("--dim", o.dim)->capture_default_str();
  gen->add_option("--model", o.model, "disk, interval or mixed (line)")->capture_default_str();
  gen->add_flag("--lattice", o.lattice, "Half-integer coordinates and reaches (line)");
  gen->add_option("--family", o.family)->capture_default_str();
  gen->add_option("--k", o.k)->capture_default_str();
  gen->add_option("--k-prime", o.k_prime);
  add_out(gen);

  auto* fam = app.add_subcommand("family", "Emit a worst-case family instance and its expected values");
  fam->add_option("--family", o.family, "spba_worst, tsba_worst or fig5_fixture")->capture_default_str();
  fam->add_option("--k", o.k)->capture_default_str();
  fam->add_option("--k-prime", o.k_prime);
  add_out(fam);

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--alg", o.alg, "spba, tsba, nbi or exact")->required();
  add_input(solve, "Instance JSON ('-' for stdin)");
  add_tie(solve);
  solve->add_option("--budget", o.budget, "State budget for exact")->capture_default_str();
  solve->add_flag("--no-prune", o.no_prune, "Disable dominance pruning in exact");
  add_out(solve);

  auto* reduce = app.add_subcommand("reduce-mds", "Build the dominating-set reduction hypergraph");
  add_input(reduce, "Graph edge list ('-' for stdin)");
  reduce->add_option("--ns", o.n_s, "Super-vertex size (default n+2)");
  add_out(reduce);

  auto* exp = app.add_subcommand("experiment", "Run the random disk-hypergraph comparison");
  exp->add_option("--n", o.ns, "Vertex counts (repeatable)")->required();
  exp->add_option("--trials", o.trials)->capture_default_str();
  exp->add_option("--seed", o.seed)->capture_default_str();
  exp->add_option("--rho", o.rho)->capture_default_str();
  exp->add_option("--rmin", o.rmin)->capture_default_str();
  exp->add_option("--rmax", o.rmax)->capture_default_str();
  exp->add_option("--dim", o.dim)->capture_default_str();
  exp->add_option("--budget", o.budget)->capture_default_str();
  exp->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  exp->add_flag("--no-fallback", o.no_fallback, "Skip over-budget trials instead of switching reference");
  add_out(exp);

  auto* verify = app.add_subcommand("verify", "Check approximation ratios against their bounds");
  add_input(verify, "Instance JSON ('-' for stdin)");
  add_tie(verify);
  verify->add_option("--budget", o.budget)->capture_default_str();
  add_out(verify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (fam->parsed()) return cmd_family(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (exp->parsed()) return cmd_experiment(o, out);
    return cmd_verify(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DegenerateInstance& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace thinpath::cli
