#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "thinpath/gadgets.hpp"
#include "thinpath/geom.hpp"
#include "thinpath/hypergraph.hpp"
#include "thinpath/nbi.hpp"
#include "thinpath/solvers.hpp"

namespace thinpath::io {

using json = nlohmann::ordered_json;

// Parse text, reporting syntax errors as InputError.
json parse(std::string_view text, std::string_view what = "input");
std::string dump(const json& j);

enum class InstanceKind { hypergraph, geometric, line };

// line: has "x"; geometric: has "points"; hypergraph: has "edges".
InstanceKind detect_kind(const json& j);

struct HypergraphInstance {
  Hypergraph hypergraph;
  VertexId source = 0;
  VertexId target = 0;
};

json hypergraph_to_json(const Hypergraph& h, VertexId s, VertexId t);
HypergraphInstance hypergraph_from_json(const json& j);

std::string_view model_name(geom::Model m) noexcept;
json geometric_to_json(const geom::GeometricInstance& g);
geom::GeometricInstance geometric_from_json(const json& j);

json line_to_json(const nbi::LineInstance& inst, const nbi::EveField* field = nullptr);
nbi::LineInstance line_from_json(const json& j);
std::optional<nbi::EveField> line_eves_from_json(const json& j);

json result_to_json(const SolveResult& r);
json bound_report_to_json(const BoundReport& r);
json expectation_to_json(const gadgets::FamilyInstance& f);
json reduction_to_json(const gadgets::ReductionInstance& r);

// Whitespace-separated "a b" pairs, 0-based; '#' starts a comment. An
// optional "n <count>" line fixes the vertex count (needed for isolated
// vertices), otherwise n = largest id + 1.
gadgets::SimpleGraph read_edge_list(std::istream& in);

}  // namespace thinpath::io
