#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permlp/errors.hpp"
#include "permlp/json_io.hpp"

namespace {

using namespace permlp;

struct Options {
  std::string graph_spec;   // family:n
  std::string graph_file;
  std::string preset;       // name:n
  std::string spec_path;    // code spec or consolidation spec
  std::string input_path;   // positional artifact (constraint set, matrix...)
  std::string mes;
  std::string lambda_csv;
  std::string mu_csv;
  std::string conjugate_csv;
  long trials = 1000;
  std::string sigma2 = "0";
  std::uint64_t seed = 20240901;
  std::int64_t limit = kDefaultEnumerationLimit;
  int copies = 1;
  int threads = 1;  // accepted for interface stability; outputs never depend
                    // on it, so a single-threaded run is always conforming
  std::string out_path;
  bool with_float = false;
  bool full = false;  // emit full vertex lists
};

std::pair<std::string, int> split_name_n(const std::string& s) {
  auto pos = s.rfind(':');
  if (pos == std::string::npos)
    throw invalid_argument_error("expected name:n, got \"" + s + "\"");
  try {
    return {s.substr(0, pos), std::stoi(s.substr(pos + 1))};
  } catch (const std::exception&) {
    throw invalid_argument_error("bad size in \"" + s + "\"");
  }
}

Graph load_graph(const Options& opt) {
  if (!opt.graph_file.empty())
    return graph_from_json(read_json_file(opt.graph_file));
  if (opt.graph_spec.empty())
    throw invalid_argument_error("need --graph family:n or --graph-file");
  auto [name, n] = split_name_n(opt.graph_spec);
  if (name == "complete") return make_family(GraphFamily::Complete, n);
  if (name == "line") return make_family(GraphFamily::Line, n);
  if (name == "televis") return make_family(GraphFamily::Televis, n);
  if (name == "circle") return make_family(GraphFamily::Circle, n);
  if (name == "cycle") return make_family(GraphFamily::Cycle, n);
  throw invalid_argument_error("unknown graph family \"" + name + "\"");
}

std::string dirname_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

// Constraint-set source shared by vertices / compact-check / constraints.
ConstraintSet load_constraints(const Options& opt) {
  if (!opt.preset.empty()) {
    auto [name, n] = split_name_n(opt.preset);
    if (name == "DS") return build_doubly_stochastic(n);
    if (name == "pure_involution") return build_pure_involution(n);
    throw invalid_argument_error("unknown preset \"" + name + "\"");
  }
  if (!opt.graph_spec.empty() || !opt.graph_file.empty()) {
    Graph g = load_graph(opt);
    if (opt.copies > 1) g = union_graph(g, opt.copies);
    return build_graph_constraints(g);
  }
  if (!opt.spec_path.empty()) {
    Json j = read_json_file(opt.spec_path);
    return consolidate(
        consolidation_spec_from_json(j, dirname_of(opt.spec_path)));
  }
  if (!opt.input_path.empty())
    return constraint_set_from_json(read_json_file(opt.input_path));
  throw invalid_argument_error(
      "need a constraint source: --preset, --graph, --spec, or an input file");
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
  std::vector<Rational> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(rat_parse(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

std::vector<int> parse_int_csv(const std::string& csv) {
  std::vector<int> out;
  for (const auto& v : parse_rational_csv(csv))
    out.push_back(static_cast<int>(v.get_num().get_si()));
  return out;
}

void emit(const Options& opt, const Json& j) {
  if (opt.out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(opt.out_path, j);
}

int dispatch(const std::string& verb, const Options& opt) {
  if (verb == "graph") {
    emit(opt, graph_to_json(opt.copies > 1 ? union_graph(load_graph(opt),
                                                         opt.copies)
                                           : load_graph(opt)));
    return 0;
  }
  if (verb == "constraints" || verb == "consolidate") {
    emit(opt, constraint_set_to_json(load_constraints(opt)));
    return 0;
  }
  if (verb == "vertices") {
    VertexSet vs = enumerate_vertices(load_constraints(opt), opt.limit);
    Json out;
    out["count"] = vs.vertices.size();
    out["complete"] = vs.complete;
    if (opt.full) out = vertex_set_to_json(vs);
    emit(opt, out);
    return 0;
  }
  if (verb == "compact-check") {
    CompactnessReport rep = check_compact(load_constraints(opt), opt.limit);
    emit(opt, compactness_report_to_json(rep));
    return 0;
  }
  if (verb == "encode") {
    if (opt.spec_path.empty()) throw invalid_argument_error("need --spec");
    CodeSpec spec = code_spec_from_json(read_json_file(opt.spec_path));
    if (opt.mes.empty()) throw invalid_argument_error("need --mes");
    Integer mes(opt.mes);
    Codeword cw = encode(mes, spec);
    Json out;
    out["mes"] = mes.get_str();
    out["codeword"] = rational_vector_to_json(cw.vector);
    out["matrix"] = matrix_to_json(wreath_to_matrix(cw.element));
    if (opt.with_float) {
      Json f = Json::array();
      for (const auto& v : cw.vector) f.push_back(rat_double(v));
      out["codeword_float"] = std::move(f);
    }
    emit(opt, out);
    return 0;
  }
  if (verb == "decode") {
    if (opt.spec_path.empty()) throw invalid_argument_error("need --spec");
    CodeSpec spec = code_spec_from_json(read_json_file(opt.spec_path));
    if (opt.input_path.empty())
      throw invalid_argument_error("need an input file with the matrix");
    Json j = read_json_file(opt.input_path);
    RationalMatrix x =
        matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"]
                                                               : j);
    Json out;
    out["message"] = decode_message(x, spec).get_str();
    emit(opt, out);
    return 0;
  }
  if (verb == "lp-decode") {
    if (opt.lambda_csv.empty()) throw invalid_argument_error("need --lambda");
    std::vector<Rational> lambda = parse_rational_csv(opt.lambda_csv);
    LPDecodeResult res;
    if (!opt.spec_path.empty()) {
      CodeSpec spec = code_spec_from_json(read_json_file(opt.spec_path));
      res = lp_decode(lambda, spec);
    } else {
      ConstraintSet l = load_constraints(opt);
      std::vector<Rational> mu;
      if (!opt.mu_csv.empty()) {
        mu = parse_rational_csv(opt.mu_csv);
      } else {
        for (int i = 0; i < l.n; ++i) mu.push_back(Rational(i + 1));
      }
      res = lp_decode(lambda, l, mu);
    }
    emit(opt, lp_decode_result_to_json(res, opt.with_float));
    return 0;
  }
  if (verb == "distance") {
    std::vector<Permutation> group;
    if (!opt.spec_path.empty()) {
      CodeSpec spec = code_spec_from_json(read_json_file(opt.spec_path));
      for (const auto& x : codebook_matrices(spec))
        group.push_back(*matrix_to_perm(x));
    } else {
      Graph g = load_graph(opt);
      if (opt.copies > 1) g = union_graph(g, opt.copies);
      group = automorphisms_bruteforce(g, 8);
    }
    if (!opt.conjugate_csv.empty()) {
      Permutation sigma(parse_int_csv(opt.conjugate_csv));
      Permutation inv = sigma.inverse();
      for (auto& g : group) g = compose(inv, compose(g, sigma));
    }
    Json out;
    out["d_l"] = kendall_tau_min(group).get_str();
    Rational de = euclidean_min(group);
    out["d_E"] = rat_str(de);
    if (opt.with_float) out["d_E_float"] = rat_double(de);
    emit(opt, out);
    return 0;
  }
  if (verb == "simulate") {
    if (opt.spec_path.empty()) throw invalid_argument_error("need --spec");
    CodeSpec spec = code_spec_from_json(read_json_file(opt.spec_path));
    SimulationReport rep =
        simulate(spec, code_constraints(spec), rat_parse(opt.sigma2),
                 opt.trials, opt.seed);
    emit(opt, simulation_report_to_json(rep));
    return 0;
  }
  throw invalid_argument_error("unknown verb \"" + verb + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "LP-decodable permutation codes: constraint builders, exact vertex "
      "enumeration, wreath-product encode/decode, and LP decoding"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> subs;
  for (const char* verb :
       {"graph", "constraints", "vertices", "compact-check", "consolidate",
        "encode", "decode", "lp-decode", "distance", "simulate"}) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("--graph", opt.graph_spec, "graph family as family:n");
    sub->add_option("--graph-file", opt.graph_file, "graph JSON file");
    sub->add_option("--preset", opt.preset,
                    "constraint preset as name:n (DS, pure_involution)");
    sub->add_option("--spec", opt.spec_path, "code or consolidation spec");
    sub->add_option("--copies", opt.copies, "number of union copies");
    sub->add_option("--mes", opt.mes, "message to encode");
    sub->add_option("--lambda", opt.lambda_csv, "received vector p/q,...");
    sub->add_option("--mu", opt.mu_csv, "initial vector p/q,...");
    sub->add_option("--conjugate", opt.conjugate_csv,
                    "conjugating permutation image list");
    sub->add_option("--trials", opt.trials, "simulation trials");
    sub->add_option("--sigma2", opt.sigma2, "noise variance p/q");
    sub->add_option("--seed", opt.seed, "PRNG seed");
    sub->add_option("--limit", opt.limit, "enumeration budget");
    sub->add_option("--threads", opt.threads, "worker threads");
    sub->add_option("--out", opt.out_path, "output file (default stdout)");
    sub->add_flag("--float", opt.with_float, "add decimal renderings");
    sub->add_flag("--full", opt.full, "emit full vertex lists");
    sub->add_option("input", opt.input_path, "input artifact file");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt);
  } catch (const permlp::Error& e) {
    permlp::Json err;
    err["error"] = e.code();
    err["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    permlp::Json err;
    err["error"] = "internal";
    err["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return 1;
  }
}
