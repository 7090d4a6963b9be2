#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permlp/codes.hpp"
#include "permlp/consolidation.hpp"
#include "permlp/constraints.hpp"
#include "permlp/graphs.hpp"
#include "permlp/lpdecode.hpp"
#include "permlp/polytope.hpp"
#include "permlp/rational.hpp"

namespace permlp {

using Json = nlohmann::json;

Json constraint_set_to_json(const ConstraintSet& s);
ConstraintSet constraint_set_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);  // symmetrizes undirected edge lists

Json matrix_to_json(const RationalMatrix& x);
RationalMatrix matrix_from_json(const Json& j);

Json vertex_set_to_json(const VertexSet& v);
VertexSet vertex_set_from_json(const Json& j);

Json code_spec_to_json(const CodeSpec& s);
CodeSpec code_spec_from_json(const Json& j);

// "blocks"/"top" entries are inline ConstraintSet documents or presets:
// "DS", "pure_involution", or "graph:<file>" (path relative to base_dir).
ConsolidationSpec consolidation_spec_from_json(const Json& j,
                                               const std::string& base_dir);

Json compactness_report_to_json(const CompactnessReport& r);
Json simulation_report_to_json(const SimulationReport& r);
Json lp_decode_result_to_json(const LPDecodeResult& r, bool with_float);

Json rational_vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace permlp
