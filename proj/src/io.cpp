#include "thinpath/io.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "thinpath/errors.hpp"

namespace thinpath::io {
namespace {

std::string idx(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

std::string dot(std::string_view base, std::string_view key) {
  return base.empty() ? std::string(key) : std::string(base) + "." + std::string(key);
}

[[noreturn]] void bad(const std::string& path, std::string_view expected) {
  throw InputError("field '" + path + "': expected " + std::string(expected));
}

const json& field(const json& obj, std::string_view key, std::string_view base = "") {
  if (!obj.is_object()) bad(base.empty() ? "<root>" : std::string(base), "object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + dot(base, key) + "'");
  return *it;
}

const json* optional_field(const json& obj, std::string_view key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::uint64_t as_uint(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  bad(path, "non-negative integer");
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(path, "finite number");
  return d;
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "array");
  return v;
}

std::vector<double> doubles(const json& v, const std::string& path) {
  std::vector<double> out;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) out.push_back(as_double(v[i], idx(path, i)));
  return out;
}

VertexId vertex(const json& v, const std::string& path) {
  const auto u = as_uint(v, path);
  if (u > 0xffffffffULL) bad(path, "vertex id below 2^32");
  return static_cast<VertexId>(u);
}

geom::Point point(const json& v, const std::string& path) {
  return geom::Point{doubles(v, path)};
}

json point_json(const geom::Point& p) { return json(p.coords); }

std::vector<geom::Eavesdropper> eves_from(const json& v, const std::string& path) {
  std::vector<geom::Eavesdropper> out;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) {
    const std::string p = idx(path, i);
    geom::Eavesdropper e;
    e.position = point(field(v[i], "p", p), p + ".p");
    e.cost = as_double(field(v[i], "c", p), p + ".c");
    out.push_back(std::move(e));
  }
  return out;
}

json eves_json(const std::vector<geom::Eavesdropper>& eves) {
  json arr = json::array();
  for (const auto& e : eves) arr.push_back(json{{"p", point_json(e.position)}, {"c", e.cost}});
  return arr;
}

}  // namespace

json parse(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

InstanceKind detect_kind(const json& j) {
  if (!j.is_object()) bad("<root>", "object");
  if (j.contains("x")) return InstanceKind::line;
  if (j.contains("points")) return InstanceKind::geometric;
  if (j.contains("edges")) return InstanceKind::hypergraph;
  throw InputError("missing field 'edges' (or 'points' / 'x' for geometric and line instances)");
}

json hypergraph_to_json(const Hypergraph& h, VertexId s, VertexId t) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(json{{"src", e.source}, {"dst", e.destinations}});
  return json{{"n", h.vertex_count()}, {"edges", std::move(edges)}, {"source", s}, {"target", t}};
}

HypergraphInstance hypergraph_from_json(const json& j) {
  const auto n = as_uint(field(j, "n"), "n");
  if (n > Hypergraph::kDefaultVertexCap)
    bad("n", "at most " + std::to_string(Hypergraph::kDefaultVertexCap) + " vertices");
  const json& edges = as_array(field(j, "edges"), "edges");
  const VertexId s = vertex(field(j, "source"), "source");
  const VertexId t = vertex(field(j, "target"), "target");
  if (s >= n) bad("source", "vertex id below n");
  if (t >= n) bad("target", "vertex id below n");

  Hypergraph::Builder b(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = idx("edges", i);
    const VertexId src = vertex(field(edges[i], "src", p), p + ".src");
    if (src >= n) bad(p + ".src", "vertex id below n");
    const json& dst = as_array(field(edges[i], "dst", p), p + ".dst");
    if (dst.empty()) bad(p + ".dst", "non-empty array");
    std::vector<VertexId> ds;
    for (std::size_t k = 0; k < dst.size(); ++k) {
      const std::string dp = idx(p + ".dst", k);
      ds.push_back(vertex(dst[k], dp));
      if (ds.back() >= n) bad(dp, "vertex id below n");
    }
    try {
      b.add_edge(src, std::move(ds));
    } catch (const StructuralError& e) {
      throw InputError("field '" + p + "': " + e.what());
    }
  }
  return {std::move(b).build(), s, t};
}

std::string_view model_name(geom::Model m) noexcept {
  switch (m) {
    case geom::Model::ring: return "ring";
    case geom::Model::disk_hypergraph: return "disk_hypergraph";
    case geom::Model::disk_graph: return "disk_graph";
    case geom::Model::unit_disk: return "unit_disk";
  }
  return "ring";
}

json geometric_to_json(const geom::GeometricInstance& g) {
  json pts = json::array();
  for (const auto& p : g.points) pts.push_back(point_json(p));
  return json{{"dim", g.dim},     {"points", std::move(pts)}, {"rmin", g.r_min},
              {"rmax", g.r_max},  {"source", g.source},       {"target", g.target},
              {"eves", eves_json(g.eves)}, {"model", model_name(g.model)}};
}

geom::GeometricInstance geometric_from_json(const json& j) {
  geom::GeometricInstance g;
  const auto dim = as_uint(field(j, "dim"), "dim");
  if (dim < 1 || dim > 16) bad("dim", "integer in [1, 16]");
  g.dim = static_cast<int>(dim);
  const json& pts = as_array(field(j, "points"), "points");
  for (std::size_t i = 0; i < pts.size(); ++i) g.points.push_back(point(pts[i], idx("points", i)));
  g.r_min = doubles(field(j, "rmin"), "rmin");
  g.r_max = doubles(field(j, "rmax"), "rmax");
  g.source = vertex(field(j, "source"), "source");
  g.target = vertex(field(j, "target"), "target");
  if (const json* e = optional_field(j, "eves")) g.eves = eves_from(*e, "eves");
  if (const json* m = optional_field(j, "model")) {
    if (!m->is_string()) bad("model", "string");
    const auto name = m->get<std::string>();
    bool known = false;
    for (auto model : {geom::Model::ring, geom::Model::disk_hypergraph, geom::Model::disk_graph,
                       geom::Model::unit_disk}) {
      if (model_name(model) == name) {
        g.model = model;
        known = true;
      }
    }
    if (!known) bad("model", "one of ring, disk_hypergraph, disk_graph, unit_disk");
  }
  g.validate();
  return g;
}

json line_to_json(const nbi::LineInstance& inst, const nbi::EveField* field_) {
  json reach;
  if (inst.model == nbi::ReachModel::disk) {
    reach = json{{"model", "disk"}, {"r", inst.radius}};
  } else {
    json ab = json::array();
    for (auto [a, b] : inst.ab) ab.push_back(json::array({a, b}));
    reach = json{{"model", "interval"}, {"ab", std::move(ab)}};
  }
  json j{{"x", inst.x}, {"reach", std::move(reach)}, {"source", inst.source}, {"target", inst.target}};
  if (field_) {
    j["dim"] = field_->dim;
    j["eves"] = eves_json(field_->eves);
  }
  return j;
}

nbi::LineInstance line_from_json(const json& j) {
  nbi::LineInstance inst;
  inst.x = doubles(field(j, "x"), "x");
  const json& reach = field(j, "reach");
  const json& model = field(reach, "model", "reach");
  if (!model.is_string()) bad("reach.model", "string");
  const auto name = model.get<std::string>();
  if (name == "disk") {
    inst.model = nbi::ReachModel::disk;
    inst.radius = doubles(field(reach, "r", "reach"), "reach.r");
  } else if (name == "interval") {
    inst.model = nbi::ReachModel::interval;
    const json& ab = as_array(field(reach, "ab", "reach"), "reach.ab");
    for (std::size_t i = 0; i < ab.size(); ++i) {
      const std::string p = idx("reach.ab", i);
      if (!ab[i].is_array() || ab[i].size() != 2) bad(p, "[a, b] pair");
      inst.ab.emplace_back(as_double(ab[i][0], p + "[0]"), as_double(ab[i][1], p + "[1]"));
    }
  } else {
    bad("reach.model", "\"disk\" or \"interval\"");
  }
  inst.source = vertex(field(j, "source"), "source");
  inst.target = vertex(field(j, "target"), "target");
  inst.validate();
  return inst;
}

std::optional<nbi::EveField> line_eves_from_json(const json& j) {
  const json* e = optional_field(j, "eves");
  if (!e) return std::nullopt;
  nbi::EveField f;
  if (const json* d = optional_field(j, "dim")) {
    const auto dim = as_uint(*d, "dim");
    if (dim < 1 || dim > 16) bad("dim", "integer in [1, 16]");
    f.dim = static_cast<int>(dim);
  }
  f.eves = eves_from(*e, "eves");
  for (std::size_t i = 0; i < f.eves.size(); ++i)
    if (f.eves[i].position.dim() != static_cast<std::size_t>(f.dim)) bad(idx("eves", i) + ".p", "point of dimension dim");
  return f;
}

json result_to_json(const SolveResult& r) {
  json j;
  j["width"] = r.width ? json(*r.width) : json(nullptr);
  j["edges"] = r.path ? json(r.path->edges) : json(nullptr);
  j["cover"] = r.cover ? json(r.cover->members.to_vector()) : json::array();
  j["states"] = r.diagnostics.states_explored;
  j["relaxations"] = r.diagnostics.relaxations;
  j["tie_break"] = tie_break_name(r.diagnostics.tie_break);
  return j;
}

json bound_report_to_json(const BoundReport& r) {
  json j{{"n", r.n},
         {"complete", r.complete},
         {"reachable", r.reachable},
         {"opt_width", r.opt_width},
         {"spba_width", r.spba_width},
         {"tsba_width", r.tsba_width},
         {"spba_ratio", r.spba_ratio},
         {"tsba_ratio", r.tsba_ratio},
         {"spba_bound", r.spba_bound},
         {"tsba_bound", r.tsba_bound}};
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["ring_bound"] = r.ring_bound ? json(*r.ring_bound) : json(nullptr);
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  return j;
}

json expectation_to_json(const gadgets::FamilyInstance& f) {
  json j{{"family", gadgets::family_name(f.family)}, {"k", f.k}};
  if (f.family == gadgets::Family::spba_worst) j["k_prime"] = f.k_prime;
  j["n"] = f.hypergraph.vertex_count();
  j["opt_width"] = f.expected.opt_width;
  j["approx_width"] = f.expected.approx_width;
  j["ratio"] = f.expected.ratio;
  j["bad_path_edges"] = f.bad_path_edges;
  return j;
}

json reduction_to_json(const gadgets::ReductionInstance& r) {
  json j = hypergraph_to_json(r.hypergraph, r.source, r.target);
  j["n_original"] = r.n_original;
  j["n_s"] = r.n_s;
  j["super_blocks"] = r.super_blocks;
  return j;
}

gadgets::SimpleGraph read_edge_list(std::istream& in) {
  gadgets::SimpleGraph g;
  std::optional<std::size_t> declared;
  std::size_t max_id = 0;
  bool any = false;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    const std::string where = "edge list line " + std::to_string(lineno);
    if (first == "n") {
      long long n = -1;
      if (!(ss >> n) || n < 0) throw InputError(where + ": expected 'n <count>'");
      declared = static_cast<std::size_t>(n);
      continue;
    }
    long long a = -1, b = -1;
    try {
      std::size_t used = 0;
      a = std::stoll(first, &used);
      if (used != first.size()) a = -1;
    } catch (const std::exception&) {
      a = -1;
    }
    std::string rest;
    if (a < 0 || !(ss >> b) || b < 0 || (ss >> rest))
      throw InputError(where + ": expected two non-negative vertex ids");
    g.edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    max_id = std::max<std::size_t>({max_id, static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    any = true;
  }
  g.n = declared ? *declared : (any ? max_id + 1 : 0);
  g.validate();
  return g;
}

}  // namespace thinpath::io
