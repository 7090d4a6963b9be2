#include "permlp/json_io.hpp"

#include <fstream>

#include "permlp/errors.hpp"

namespace permlp {

namespace {

Rational rat_field(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw parse_error("expected a rational (integer or \"p/q\" string)");
}

std::string prefixed_path(const std::string& base_dir,
                          const std::string& path) {
  if (base_dir.empty() || path.empty() || path.front() == '/') return path;
  return base_dir + "/" + path;
}

}  // namespace

Json constraint_set_to_json(const ConstraintSet& s) {
  Json out;
  out["n"] = s.n;
  Json list = Json::array();
  for (const auto& c : s.constraints) {
    Json jc;
    Json coeffs = Json::array();
    for (const auto& [idx, coef] : c.coeffs)
      coeffs.push_back(Json::array({idx.first, idx.second, rat_str(coef)}));
    jc["coeffs"] = std::move(coeffs);
    jc["rel"] = c.rel == Relation::Equal ? "eq" : "ge";
    jc["rhs"] = rat_str(c.rhs);
    jc["label"] = c.label;
    list.push_back(std::move(jc));
  }
  out["constraints"] = std::move(list);
  return out;
}

ConstraintSet constraint_set_from_json(const Json& j) {
  ConstraintSet s;
  try {
    s.n = j.at("n").get<int>();
    for (const auto& jc : j.at("constraints")) {
      LinearConstraint c;
      for (const auto& entry : jc.at("coeffs")) {
        int i = entry.at(0).get<int>();
        int k = entry.at(1).get<int>();
        if (i < 0 || i >= s.n || k < 0 || k >= s.n)
          throw parse_error("coefficient index out of range");
        c.coeffs[{i, k}] += rat_field(entry.at(2));
      }
      std::string rel = jc.at("rel").get<std::string>();
      if (rel == "eq")
        c.rel = Relation::Equal;
      else if (rel == "ge")
        c.rel = Relation::GreaterEqual;
      else
        throw parse_error("rel must be \"eq\" or \"ge\"");
      c.rhs = rat_field(jc.at("rhs"));
      if (jc.contains("label")) c.label = jc.at("label").get<std::string>();
      c.canonicalize();
      s.constraints.push_back(std::move(c));
    }
  } catch (const Json::exception& e) {
    throw parse_error(std::string("constraint set: ") + e.what());
  }
  return s;
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.n;
  out["directed"] = g.directed;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) {
    if (!g.directed && a > b) continue;  // one listing per undirected edge
    edges.push_back(Json::array({a, b}));
  }
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    bool directed = j.value("directed", false);
    std::set<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      int a = e.at(0).get<int>();
      int b = e.at(1).get<int>();
      edges.insert({a, b});
      if (!directed) edges.insert({b, a});
    }
    return Graph(n, directed, std::move(edges));
  } catch (const Json::exception& e) {
    throw parse_error(std::string("graph: ") + e.what());
  }
}

Json matrix_to_json(const RationalMatrix& x) {
  Json rows = Json::array();
  for (int i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < x.cols(); ++j) row.push_back(rat_str(x.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  try {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    RationalMatrix x(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(j.at(i).size()) != cols)
        throw parse_error("ragged matrix rows");
      for (int k = 0; k < cols; ++k) x.at(i, k) = rat_field(j.at(i).at(k));
    }
    return x;
  } catch (const Json::exception& e) {
    throw parse_error(std::string("matrix: ") + e.what());
  }
}

Json vertex_set_to_json(const VertexSet& v) {
  Json out;
  out["complete"] = v.complete;
  Json verts = Json::array();
  for (const auto& x : v.vertices) verts.push_back(matrix_to_json(x));
  out["vertices"] = std::move(verts);
  return out;
}

VertexSet vertex_set_from_json(const Json& j) {
  VertexSet v;
  try {
    v.complete = j.at("complete").get<bool>();
    for (const auto& m : j.at("vertices"))
      v.vertices.push_back(matrix_from_json(m));
  } catch (const Json::exception& e) {
    throw parse_error(std::string("vertex set: ") + e.what());
  }
  return v;
}

namespace {

GroupFamily family_from_code(const std::string& code, int degree) {
  if (code == "C") return GroupFamily(FamilyKind::Cyclic, degree);
  if (code == "D") return GroupFamily(FamilyKind::Dihedral, degree);
  if (code == "S") return GroupFamily(FamilyKind::Symmetric, degree);
  if (code == "P4") return GroupFamily(FamilyKind::PureInv4, degree);
  if (code == "U") return GroupFamily(FamilyKind::Unit, degree);
  throw parse_error("unknown family code \"" + code +
                    "\" (expected C, D, S, P4, or U)");
}

}  // namespace

Json code_spec_to_json(const CodeSpec& s) {
  Json out;
  out["nu"] = s.nu;
  out["R"] = s.R;
  Json rows = Json::array();
  for (const auto& f : s.row_families) rows.push_back(family_code(f));
  out["rows"] = std::move(rows);
  out["top"] = family_code(s.top_family);
  Json mu = Json::array();
  for (const auto& v : s.mu) mu.push_back(rat_str(v));
  out["mu"] = std::move(mu);
  return out;
}

CodeSpec code_spec_from_json(const Json& j) {
  try {
    int nu = j.at("nu").get<int>();
    int R = j.at("R").get<int>();
    std::vector<GroupFamily> rows;
    for (const auto& code : j.at("rows"))
      rows.push_back(family_from_code(code.get<std::string>(), nu));
    GroupFamily top = family_from_code(j.at("top").get<std::string>(), R);
    std::vector<Rational> mu;
    if (j.contains("mu"))
      for (const auto& v : j.at("mu")) mu.push_back(rat_field(v));
    return CodeSpec(nu, R, std::move(rows), top, std::move(mu));
  } catch (const Json::exception& e) {
    throw parse_error(std::string("code spec: ") + e.what());
  }
}

namespace {

ConstraintSet constraint_set_ref(const Json& j, int n,
                                 const std::string& base_dir) {
  if (j.is_object()) {
    ConstraintSet s = constraint_set_from_json(j);
    if (s.n != n)
      throw parse_error("inline constraint set has the wrong size");
    return s;
  }
  if (!j.is_string())
    throw parse_error("constraint-set ref must be an object or preset string");
  std::string ref = j.get<std::string>();
  if (ref == "DS") return build_doubly_stochastic(n);
  if (ref == "pure_involution") return build_pure_involution(n);
  if (ref.rfind("graph:", 0) == 0) {
    Json g = read_json_file(prefixed_path(base_dir, ref.substr(6)));
    Graph graph = graph_from_json(g);
    if (graph.n != n) throw parse_error("referenced graph has the wrong size");
    return build_graph_constraints(graph);
  }
  throw parse_error("unknown constraint-set preset \"" + ref + "\"");
}

}  // namespace

ConsolidationSpec consolidation_spec_from_json(const Json& j,
                                               const std::string& base_dir) {
  try {
    int nu = j.at("nu").get<int>();
    int R = j.at("R").get<int>();
    std::vector<std::vector<ConstraintSet>> blocks;
    for (const auto& row : j.at("blocks")) {
      std::vector<ConstraintSet> out_row;
      for (const auto& cell : row)
        out_row.push_back(constraint_set_ref(cell, nu, base_dir));
      blocks.push_back(std::move(out_row));
    }
    ConstraintSet top = constraint_set_ref(j.at("top"), R, base_dir);
    return ConsolidationSpec(BlockStructure(nu, R), std::move(blocks),
                             std::move(top));
  } catch (const Json::exception& e) {
    throw parse_error(std::string("consolidation spec: ") + e.what());
  }
}

Json compactness_report_to_json(const CompactnessReport& r) {
  Json out;
  switch (r.verdict) {
    case CompactVerdict::Compact: out["verdict"] = "COMPACT"; break;
    case CompactVerdict::NotCompact: out["verdict"] = "NOT_COMPACT"; break;
    case CompactVerdict::Unknown: out["verdict"] = "UNKNOWN"; break;
  }
  out["method"] =
      r.method == CompactMethod::Exhaustive ? "EXHAUSTIVE" : "PROBE";
  if (r.vertex_count) out["vertex_count"] = r.vertex_count->get_str();
  if (r.fractional_witness)
    out["fractional_witness"] = matrix_to_json(*r.fractional_witness);
  return out;
}

Json simulation_report_to_json(const SimulationReport& r) {
  Json out;
  out["trials"] = r.trials;
  out["noise_variance"] = rat_str(r.noise_variance);
  out["codeword_errors"] = r.codeword_errors;
  out["ml_mismatches"] = r.ml_mismatches;
  out["fractional_optima"] = r.fractional_optima;
  out["degenerate_optima"] = r.degenerate_optima;
  out["seed"] = r.seed;
  return out;
}

Json lp_decode_result_to_json(const LPDecodeResult& r, bool with_float) {
  Json out;
  switch (r.solution.status) {
    case SolveStatus::Optimal: out["status"] = "OPTIMAL"; break;
    case SolveStatus::Infeasible: out["status"] = "INFEASIBLE"; break;
    case SolveStatus::Unbounded: out["status"] = "UNBOUNDED"; break;
  }
  if (r.solution.status == SolveStatus::Optimal) {
    out["point"] = matrix_to_json(r.solution.point);
    out["objective_value"] = rat_str(r.solution.objective_value);
    out["is_vertex"] = r.solution.is_vertex;
    out["fractional"] = r.fractional;
    out["decoded_vector"] = rational_vector_to_json(r.decoded_vector);
    if (with_float) {
      out["objective_value_float"] = rat_double(r.solution.objective_value);
      Json dv = Json::array();
      for (const auto& v : r.decoded_vector) dv.push_back(rat_double(v));
      out["decoded_vector_float"] = std::move(dv);
    }
  }
  if (r.message) out["message"] = r.message->get_str();
  return out;
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rat_field(v));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace permlp
